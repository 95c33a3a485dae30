from fastapi import FastAPI

from app.api import grassmann, networks
from app.core.config import configure_logging

configure_logging()

app = FastAPI(title="Cactus Network Grassmannian Toolkit")

# Network registry, electrical data and rewrites
app.include_router(networks.router)

# Plücker coordinates, forms and charts
app.include_router(grassmann.router)
