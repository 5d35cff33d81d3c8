"""
Kronring Package

Exact arithmetic in simple integral extensions R[X]/(f): coordinate vectors,
companion matrices and the Kronecker-product formula for the product.
"""

__version__ = "0.1.0"
__author__ = "Ayush Raj"
