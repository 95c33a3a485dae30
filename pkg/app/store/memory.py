from typing import Dict

from app.core.models import CactusNetwork

networks: Dict[str, CactusNetwork] = {}
