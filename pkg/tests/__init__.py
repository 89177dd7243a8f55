"""
Test modules for zeta_relations.
"""
