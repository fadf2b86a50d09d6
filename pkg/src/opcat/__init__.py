"""opcat: a verification workbench for finite unary operadic 2-categories.

Everything is finite and explicit: simplicial sets truncated at level
four, 2-categories and strict monoidal categories as composition
tables, operadic structure maps as integer arrays.  Each construction
ships with a validator or certificate so that every law it is supposed
to satisfy can be checked mechanically on concrete instances.

Module map
----------
``simplicial``
    Truncated simplicial sets, maps, décalage, coskeleta, inner horns.
``twocat``
    Finite (2-)categories, strict monoidal categories, nerves, the
    décalage/lax-slice comparison.
``operadic``
    Unary operadic 2-categories: assembly, numbered-law validation,
    parametrized morphisms, bouquets, quasibijections.
``operads``
    Categorical operads over an operadic base and their conversions.
``grothendieck``
    Total structures, split fibrations, extraction, round trips.
``freemon``
    Free strict monoidal presentations of truncated simplicial sets,
    the nerve adjunction, and a bounded word problem.
``io_json``
    Deterministic JSON envelopes with schema validation.
``cli``
    The ``opcat`` command-line workbench.
"""

from .errors import (NotAHorn, OpcatError, StructureError, UndecidedAtBound,
                     UnsupportedPresentation)
from .freemon import (MonFunctorAssignment, MonGenerator, MonPresentation,
                      Term, adjunction_check, compose_terms,
                      enumerate_ssetmaps, evaluate_term, hom_moncat,
                      induced_assignment, induced_map, juxtapose, leaf, node,
                      phi0, phi_tr3, presentation_cells, presentation_equal,
                      presentations_equivalent, psi)
from .grothendieck import (SplitFibration, canonical_fibration,
                           cartesian_failure, check_split_fibration,
                           extract_operad, extraction_cells, find_splitting,
                           grothendieck, has_unique_trivial_objects,
                           is_p_cartesian, para_comparison, pi0_iso_check,
                           roundtrip_fibration, roundtrip_operad,
                           slice_comparison, total_cells,
                           trivial_objects_over_units)
from .io_json import Workspace, dumps, kind_of, load, loads, save
from .operadic import (OperadicFunctor, UnaryOperadic2Cat, bouquets,
                       check_unit_terminality, from_2category,
                       identity_functor, is_quasibijection, para,
                       quasibijections, terminal_functor, terminal_odot,
                       to_simplicial, validate_operadic,
                       validate_operadic_functor)
from .operads import (CategoricalOperad, is_one_connected,
                      moncat_from_operad, operad, operad_from_2cat,
                      operad_from_moncat, restrict_operad, validate_operad)
from .report import (BijectionCertificate, Certificate, ValidationReport,
                     Violation)
from .simplicial import (SSetMap, TruncatedSimplicialSet,
                         certify_levelwise_iso, compose_maps, coskeleton_extend,
                         decalage_top, fillers, identity_map, pullback_ssets,
                         sset, sset_map, truncate, validate_simplicial,
                         validate_ssetmap)
from .twocat import (Finite2Category, FiniteCategory, StrictMonCat,
                     dec_nerve_iso, deloop, duskin_nerve, lax_slice_sum,
                     moncat, nerve_data, two_category, validate_2category,
                     validate_moncat)

__version__ = "0.1.0"
