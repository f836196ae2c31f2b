"""Crystal and quasi-crystal graphs on words, quasi-ribbon tableaux and
quasi-arrays, with exact quasi-symmetric expansions and skeletons."""

__version__ = "0.1.0"
