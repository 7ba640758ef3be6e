from forge.homology.boundary import BoundaryMatrix, HomologyInputError, boundary_matrix
from forge.homology.smith import integer_rank, rank_mod2, smith_normal_form
from forge.homology.homology import HomologyReport, homology
from forge.homology.pseudomanifold import NotPureError, PseudomanifoldReport, induced_sign, pseudomanifold_check
