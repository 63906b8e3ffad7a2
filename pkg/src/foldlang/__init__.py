"""foldlang: string folding systems and their pumping lemmas."""

from .folding import (Alphabet, Direction, FoldTrace, fold, fold_permutation,
                      fold_step, fold_trace, split_updown, PROC_ALPHABET)
from .regular import RegularLang, RegDecomposition, parse_regex, compile_ast
from .cfg import ContextFreeLang, CfgDecomposition, parse_grammar, to_normal_form
from .fsystem import (FSystem, fs_enumerate, fs_member, equal_length_pair,
                      finite_language_system, parse_spec, load_spec)
from .pumping import (StrandPlan, PumpFamily, VerificationReport, auto_plan,
                      lemma1_plan, lemma2_plan_cf_reg, lemma2_plan_reg_cf,
                      lemma3_plan, plan_to_family, verify_plan, verify_family,
                      refute_unary_family)
from . import errors

__all__ = [
    "Alphabet", "Direction", "FoldTrace", "fold", "fold_permutation",
    "fold_step", "fold_trace", "split_updown", "PROC_ALPHABET",
    "RegularLang", "RegDecomposition", "parse_regex", "compile_ast",
    "ContextFreeLang", "CfgDecomposition", "parse_grammar", "to_normal_form",
    "FSystem", "fs_enumerate", "fs_member", "equal_length_pair",
    "finite_language_system", "parse_spec", "load_spec",
    "StrandPlan", "PumpFamily", "VerificationReport", "auto_plan",
    "lemma1_plan", "lemma2_plan_cf_reg", "lemma2_plan_reg_cf", "lemma3_plan",
    "plan_to_family", "verify_plan", "verify_family", "refute_unary_family",
    "errors",
]
