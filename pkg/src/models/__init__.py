"""
Data models and value types
"""
