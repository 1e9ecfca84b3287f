"""
quiver-grass: exact geometry of Kronecker quiver Grassmannians
"""

__version__ = "0.1.0"
