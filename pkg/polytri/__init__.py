"""
Counting triangulations of convex polygons whose sides carry collinear subdivision points: closed formulas, a
brute-force oracle, generating functions and asymptotics.
"""
