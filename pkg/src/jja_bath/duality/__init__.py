"""Bath duality between large-E_C and large-E_J chains."""

from jja_bath.duality.mapping import DualityMap, DualityReport, map_to_large_ej, mapped_chain, verify_duality

__all__ = ["DualityMap", "DualityReport", "map_to_large_ej", "mapped_chain", "verify_duality"]
