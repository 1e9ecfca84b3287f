"""
Rendering helpers for the command line
"""
