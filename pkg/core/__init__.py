"""
ShiftLab Core Module
Shifted complexes, threshold graphs and exhaustive verification of their theorems
"""

__version__ = "1.0.0"
