"""Multi-zone HVAC control laboratory.

A closed-loop simulation testbed for a hierarchical multi-zone HVAC
controller (receding-horizon AHU optimizer feeding a projection-based
VAV dispatcher) evaluated against a rule-based dual-maximum controller
on a mismatched per-zone virtual building.
"""

__version__ = "0.1.0"
