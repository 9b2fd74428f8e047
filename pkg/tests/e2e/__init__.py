"""End-to-end tests for oddprod"""
