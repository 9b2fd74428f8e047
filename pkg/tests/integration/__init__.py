"""Integration tests for oddprod"""
