"""intransim - coevolutionary intransitivity simulator"""

__version__ = "1.0.0"
