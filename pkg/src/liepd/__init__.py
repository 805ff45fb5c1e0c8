"""Exact computations with free 2-sorted representations of Lie algebras and
Lie algebras with projection-derivation."""
from .errors import (BudgetError, ContextError, DomainError, IndeterminateError, LiePDError,
                     ParseError, RankError, SortError, ValidationError)
from .scalars import GF, QQ, FpScalar, format_scalar, parse_scalar
from .freeassoc import AssocElement, ModuleElement, assoc_mul, module_mul
from .freelie import (LieElement, LyndonBasisElement, embed_assoc, lie_bracket, lie_normal_form,
                      lyndon_basis)
from .representation import (FinRep, FreeRep, RepElement, RepHom, act, coproduct, hom_check,
                             hom_eval, mediating_hom, rank_invariants)
from .projder import (FreePD, PDContext, PDElement, PDHom, free_gen_transform, functor_F,
                      functor_F_hom, functor_Finv, functor_Finv_hom, pd_bracket, pd_p, pd_r)
from .words import (BracketWordFamily, ProjWordFamily, WordSystem, bracket_word_solve,
                    inner_witness_check, proj_word_solve, scalar_word_constraints,
                    starred_axiom_check, word_apply)
from .congruence import (CongruencePair, beta_related, congruence_close, double_prime,
                         restrict_congruence, solutions_of, transport_F, transport_Finv)

__all__ = [
    "BudgetError", "ContextError", "DomainError", "IndeterminateError", "LiePDError", "ParseError",
    "RankError", "SortError", "ValidationError", "GF", "QQ", "FpScalar", "format_scalar",
    "parse_scalar", "AssocElement", "ModuleElement", "assoc_mul", "module_mul", "LieElement",
    "LyndonBasisElement", "embed_assoc", "lie_bracket", "lie_normal_form", "lyndon_basis",
    "FinRep", "FreeRep", "RepElement", "RepHom", "act", "coproduct", "hom_check", "hom_eval",
    "mediating_hom", "rank_invariants", "FreePD", "PDContext", "PDElement", "PDHom",
    "free_gen_transform", "functor_F", "functor_F_hom", "functor_Finv", "functor_Finv_hom",
    "pd_bracket", "pd_p", "pd_r", "BracketWordFamily", "ProjWordFamily", "WordSystem",
    "bracket_word_solve", "inner_witness_check", "proj_word_solve", "scalar_word_constraints",
    "starred_axiom_check", "word_apply", "CongruencePair", "beta_related", "congruence_close",
    "double_prime", "restrict_congruence", "solutions_of", "transport_F", "transport_Finv",
]
