"""
qclass - equivariant quasisymmetric invariants of double posets and digraphs.
"""

__version__ = "0.1.0"
__author__ = "qclass developers"
__description__ = "Exact equivariant quasisymmetric invariants of double posets and digraphs"
