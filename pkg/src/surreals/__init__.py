"""Exact engine for Conway's surreal numbers at desk scale.

Three layers, all exact:

* `dyadic` - the finite-birthday numbers k/2^h with their genealogy
  (sign expansions, parents/children, oldest-in-interval search).
* `genesis` - the brute-force cut-by-cut construction of the first
  generations, used as an independent oracle.
* `names`/`normalform` - names {X|Y} resolved through the mediator
  theorem, genetic (recursive) arithmetic, and Conway normal forms
  w^(y)*r + ... for infinite and infinitesimal values.

`parser`/`cli` expose a small expression language over all of it.
"""

from .dyadic import (Dyadic, MINUS, PLUS, by_birthday, children, decode_signs,
                     div_exact, left_parent, lineage, parent, right_parent,
                     sign_expansion, simplest_in_interval)
from .errors import (EmptyInputError, EmptyIntervalError, InvalidNameError,
                     LimitExceededError, NoParentError, NotOrdinalError,
                     NotPositiveError, ParseError, RecursionCapError,
                     SurrealError, UnbalancedBraceError, UnsupportedError)
from .genesis import (GenNumber, Universe, amalgam_leq, build_universe,
                      cut_leq, cut_lt, map_to_dyadic)
from .names import (Name, dextronome, genetic_add, genetic_inverse_name,
                    genetic_mul, genetic_neg, intime_name, is_name_of,
                    resolve, synonymous)
from .normalform import (NormalForm, OMEGA, OMEGA_OR_LATER, Rational, Surreal,
                         add, as_terms, birthday, commensurable, compare, div,
                         from_terms, inverse, is_ordinal, is_real,
                         leading_magnitude, much_less, mul, natural_sum, neg,
                         omega_pow, render, sub)
from .parser import evaluate, parse

__version__ = "0.1.0"

__all__ = [
    "Dyadic", "NormalForm", "Surreal", "Name", "GenNumber", "Universe",
    "Rational", "OMEGA", "OMEGA_OR_LATER", "PLUS", "MINUS",
    "simplest_in_interval", "sign_expansion", "decode_signs", "birthday",
    "parent", "children", "lineage", "left_parent", "right_parent",
    "by_birthday", "div_exact",
    "build_universe", "cut_leq", "cut_lt", "amalgam_leq", "map_to_dyadic",
    "resolve", "is_name_of", "synonymous", "intime_name", "dextronome",
    "genetic_neg", "genetic_add", "genetic_mul", "genetic_inverse_name",
    "compare", "add", "sub", "mul", "div", "neg", "inverse", "omega_pow",
    "from_terms", "as_terms", "commensurable", "much_less",
    "leading_magnitude", "is_real", "is_ordinal", "natural_sum", "render",
    "parse", "evaluate",
    "SurrealError", "EmptyIntervalError", "NoParentError",
    "LimitExceededError", "InvalidNameError", "UnsupportedError",
    "RecursionCapError", "NotPositiveError", "NotOrdinalError", "ParseError",
    "UnbalancedBraceError", "EmptyInputError",
]
