"""Verification workbench for finite path categories and display maps.

Thin wrappers over the command dispatcher: each helper returns the verdict
tree as a Report and raises ValueError when the command line or the input
file is unusable.
"""

try:
    from ._catbench import CommandResult, Finding, Report, run, usage
except ImportError:  # development tree: the compiled module sits in the build dir
    from _catbench import CommandResult, Finding, Report, run, usage

__all__ = [
    "CommandResult",
    "Finding",
    "Report",
    "run",
    "usage",
    "validate",
    "check",
    "derive_id_types",
    "factorize",
    "lift",
    "synthesize_pf",
    "translate",
    "roundtrip",
    "split",
    "coherence",
    "counterexample",
    "matrix",
]


def _one(args):
    res = run([str(a) for a in args])
    if res.exit_code == 2:
        raise ValueError(res.error)
    return res.report


def validate(path):
    return _one(["validate", path])


def check(axioms, path):
    """axioms: path-axioms, dmpc, root, split, lf, or stability."""
    return _one(["check", axioms, path])


def derive_id_types(path):
    return _one(["derive", "id-types", path])


def factorize(path, morphism):
    return _one(["factorize", path, morphism])


def lift(path, w, f, p, sigma):
    return _one(["lift", path, w, f, p, sigma])


def synthesize_pf(path, *tower):
    return _one(["synthesize", "pf", path, *tower])


def translate(direction, path):
    """direction: to-disp or to-path."""
    return _one(["translate", direction, path])


def roundtrip(path):
    return _one(["roundtrip", path])


def split(path):
    return _one(["split", path])


def coherence(path):
    return _one(["coherence", path])


def counterexample(depth=None):
    args = ["counterexample"]
    if depth is not None:
        args += ["--depth", depth]
    return _one(args)


def matrix(path):
    return _one(["matrix", path])
