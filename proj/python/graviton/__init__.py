"""Deterministic multi-chain liquidity-protocol engine.

Thin re-export of the compiled extension. The module lives at
``graviton._graviton`` in an installed wheel and as a top-level
``_graviton`` when running against an in-tree CMake build.
"""

try:
    from graviton._graviton import (
        Engine,
        ProtocolError,
        Scenario,
        load_scenario,
        optimal_arb,
        parse_scenario,
        run_csv,
        swap_output,
    )
except ImportError:
    from _graviton import (
        Engine,
        ProtocolError,
        Scenario,
        load_scenario,
        optimal_arb,
        parse_scenario,
        run_csv,
        swap_output,
    )

__all__ = [
    "Engine",
    "ProtocolError",
    "Scenario",
    "load_scenario",
    "optimal_arb",
    "parse_scenario",
    "run_csv",
    "swap_output",
]
