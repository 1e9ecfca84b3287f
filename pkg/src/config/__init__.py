"""
Configuration management for quiver-grass
"""
