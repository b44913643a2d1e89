"""Exact toolkit for squarefree lexsegment ideals."""
