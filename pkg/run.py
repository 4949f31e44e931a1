#!/usr/bin/env python3
"""
Development runner for the Fibrous Filter Calculator HTTP service.
"""

import uvicorn

from filtration.utils.settings import get_settings

if __name__ == "__main__":
    settings = get_settings()
    uvicorn.run(
        "filtration.main:app",
        host=settings.host,
        port=settings.port,
        reload=True,
        log_level=settings.log_level.lower()
    )
