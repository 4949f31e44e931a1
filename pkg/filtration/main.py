from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from filtration import __version__
from filtration.routers import filtration_routes
from filtration.utils.settings import get_settings

settings = get_settings()

app = FastAPI(
    title="Fibrous Filter Calculator",
    description="Efficiency and penetration of fibrous filter media from single-fiber capture mechanisms",
    version=__version__,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.cors_origins,
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)

app.include_router(filtration_routes.router)


@app.get("/")
async def info():
    """Service info."""
    return {
        "name": "Fibrous Filter Calculator",
        "version": __version__,
        "status": "running",
        "endpoints": {
            "docs": "/docs",
            "point": "/filtration/point",
            "sweep": "/filtration/sweep",
            "mpps": "/filtration/mpps",
        },
    }


@app.get("/health")
async def health_check():
    """Health check endpoint."""
    return {"status": "healthy"}
