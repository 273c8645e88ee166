"""
The ``polytri`` command line. See :mod:`polytricli.main`.
"""
