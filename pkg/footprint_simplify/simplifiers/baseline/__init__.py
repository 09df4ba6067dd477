from .rdp_simplifier import RdpParams, RdpSimplifier, rdp_polyline, rdp_ring

__all__ = ["RdpParams", "RdpSimplifier", "rdp_polyline", "rdp_ring"]
