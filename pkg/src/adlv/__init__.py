"""Exact combinatorics of superbasic affine Deligne-Lusztig varieties for GL_n."""

__version__ = "0.1.0"
