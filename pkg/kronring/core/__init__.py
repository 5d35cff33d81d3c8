"""
Core Module

Configuration, logging and the exception hierarchy.
"""
