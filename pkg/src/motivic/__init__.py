"""Exact calculus of monodromic motive classes and vanishing cycles.

The package computes, with exact arbitrary-precision arithmetic, in a
finitely presented fragment of the ring of monodromic motive classes over
declared base spaces: half-integer powers of the Tate class, opaque cyclic
cover symbols, and the group ring of principal Z2-bundle classes under the
convolution product.  On top of the ring it mechanizes the standard
singularity pipeline: rational zeta functions from resolution data, nearby
and vanishing cycles, exterior-sum products, quadratic-form twists and
stabilization transport, descent-checked gluing over oriented atlases, and
torus localization, together with an independent arc-space oracle and a
file-driven CLI.
"""

from .arcs import ArcContext, MonomialFunction, arc_class, zeta_truncated
from .bundles import (BundleClass, bundle_class, bundle_pullback,
                      bundle_tensor, from_square_root, generator,
                      tensor_square_roots, trivial)
from .dcrit import (Atlas, CriticalChart, GlobalMotive, OverlapDatum,
                    ScissorPiece, check_orientation, glue,
                    pushforward_to_point, validate_atlas)
from .errors import (DescentFailure, DotUndefined, MissingRestriction,
                     MissingScissorTable, MissingTransport, MotivicError,
                     NoUnderlyingClass, OdotUndecidable, OrientationMissing,
                     RegistryError, SpaceMismatch, UnknownDatum,
                     UnregisteredProduct, UnsupportedShape, ValidationFailed,
                     ZeroWeight)
from .halflaurent import HalfLaurent
from .localize import (FixedComponentDatum, localization_check, localize_sum,
                       virtual_index)
from .motive import (Motive, mot_add, mot_boxdot, mot_dot, mot_equal,
                     mot_odot, pi_forget, pullback, pushforward,
                     symbol_motive, upsilon)
from .registry import POINT, Morphism, Product, Registry, Space, Symbol
from .stabilize import (EmbeddingDatum, QuadraticBundleDatum,
                        compose_embeddings, quadratic_form_motive,
                        stabilize_pullback, thom_sebastiani,
                        twist_by_quadratic)
from .zeta import (Divisor, PointTable, RationalMotive, ResolutionData,
                   RestrictionTable, Stratum, expand_series,
                   inverse_series_constant_term, milnor_fibre_at,
                   nearby_cycle, validate_resolution, vanishing_cycle,
                   zeta_function)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
