from _wittsuper import (
    apply_field,
    bracket,
    classify,
    levi,
    mul,
    run_suite,
    shadow,
    suite_names,
    tau,
)

__all__ = [
    "apply_field",
    "bracket",
    "classify",
    "levi",
    "mul",
    "run_suite",
    "shadow",
    "suite_names",
    "tau",
]
