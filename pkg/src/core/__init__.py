"""
Computational core: representations, coefficient quivers, cells, invariants and cluster algebras
"""
