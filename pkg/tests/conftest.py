import sys

# Straightening recurses on whole words; deep words need headroom.
sys.setrecursionlimit(100000)
