"""
Tabular and JSON export helpers for reports and ring tables.
"""
from cyclecalc.data.exports import *
