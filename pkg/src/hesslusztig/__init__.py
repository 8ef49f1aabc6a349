"""Exact combinatorics of regular semisimple Lusztig and Hessenberg varieties."""

from .rootsys import CartanDatum, RootSystem, build_root_system, root_system
from .weyl import (
    LaurentPolyQ,
    WeylElement,
    all_elements,
    bruhat_leq,
    enumerate_by_length,
    from_word,
    length_generating_function,
    longest_element,
    reflection,
)
from .hess import RootIdeal, is_smooth, is_valid_ideal, m_w, rationally_smooth
from .gkm import GKMGraph, gkm_flag, gkm_hessenberg, gkm_lusztig, poincare_polynomial
from .charlib import Character, bott_euler, localization_euler, v_w_character, weyl_character

__version__ = "0.1.0"
