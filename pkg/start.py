#!/usr/bin/env python3
"""
Deployment entry point: binds all interfaces on $PORT.
"""
import uvicorn

from filtration.utils.settings import get_settings

if __name__ == "__main__":
    settings = get_settings()
    uvicorn.run(
        "filtration.main:app",
        host="0.0.0.0",
        port=settings.port,
        log_level=settings.log_level.lower()
    )
