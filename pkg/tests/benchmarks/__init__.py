"""Performance benchmarks for oddprod"""
