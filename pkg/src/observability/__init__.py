"""
Logging and tracing components
"""
