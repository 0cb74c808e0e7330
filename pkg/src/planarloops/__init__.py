"""Exact Temperley-Lieb diagram calculus, complexes of planar loops, their
free dga models, and integral homology."""

from .coeff import (CoefficientDomain, DomainError, PointedRing, QQ, Scalar,
                    ZA, ZZ, arith, prime_field, specialize)
from .diagram import (DiagramError, Letter, LinkState, TLDiagram, cell_basis,
                      close_up, compose, enumerate_diagrams, enumerate_letters,
                      identity_diagram, new_diagram, parse_diagram,
                      parse_letter, slice_diagram, unslice)
from .loops import (Chain, ComplexSpec, EndSpec, Graffito, GraffitoError,
                    build_complex, chain_to_vector, close_ends, differential,
                    divider_count, empty_system, enumerate_graffiti, face,
                    from_word, involution_lr, involution_tb, loop_count,
                    new_graffito, nondivider_count, parse_chain,
                    parse_graffito, pivot_sequence, product, to_word,
                    vector_to_chain)
from .freedga import (AlgebraError, DgaMorphism, FreeDGA, GradedGenerator,
                      NCPoly, alpha_boundary_check, check_chain_map,
                      check_involution_relations, dga_differential, four_model,
                      minimal_model, model_involutions, parse_poly, phi,
                      poly_arith, psi, specialize_complex, truncated_complex)
from .homology import (ChainComplexData, HomologyGroup, SmithForm,
                       SparseMatrix, build_word_complex, homology,
                       integer_kernel_basis, is_boundary, is_cycle,
                       rank_over_field, smith_normal_form, solve_integer,
                       validate_d_squared, weight_decompose)

__version__ = "0.1.0"
