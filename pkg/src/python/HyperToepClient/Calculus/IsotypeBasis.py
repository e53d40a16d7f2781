"""
Peter-Weyl decomposition of the polynomials on C^{r x s}: exact, Fischer
orthogonal (unnormalized) bases of the isotypic components P_mu, built one
weight space (row sums, column sums) at a time from bideterminants, and the
isotypic projections derived from them.
"""

# pylint: disable=invalid-name

from __future__ import division

import logging
from collections import namedtuple
from functools import lru_cache
from itertools import product

from sympy.utilities.iterables import multiset_permutations

from HyperToepClient.ClientExceptions import ParameterException, NumericalException
from HyperToepClient.ClientUtilities import CALC_LOGGER_NAME
from HyperToepClient.Calculus.DomainParams import Partition, partitionsOf
from HyperToepClient.Calculus.SymFunc import kostkaNumber, _horizontalStrips
from HyperToepClient.Calculus.MatrixPoly import MatrixPoly, fischerPairing

logger = logging.getLogger(CALC_LOGGER_NAME)


class IsotypeBasis(namedtuple('IsotypeBasis', ['mu', 'shape', 'vectors', 'gram'])):
    """
    _IsotypeBasis_

    vectors are pairwise Fischer orthogonal; gram[i] = (vectors[i]|vectors[i]).
    """
    __slots__ = ()

    @property
    def dimension(self):
        return len(self.vectors)


def semistandardTableaux(mu, content):
    """
    Semistandard tableaux of shape mu and the given content, as tuples of
    rows with 0-based letters.
    """
    mu = Partition(mu)
    content = tuple(content)
    if sum(content) != mu.size:
        return []
    if not content:
        return [()] if not mu else []
    letter = len(content) - 1
    result = []
    for nu in _horizontalStrips(mu, content[-1]):
        for tableau in semistandardTableaux(nu, content[:-1]):
            rows = [list(row) for row in tableau] + [[] for _ in range(mu.length - len(tableau))]
            for i in range(mu.length):
                rows[i] = rows[i] + [letter] * (mu[i] - nu.part(i + 1))
            result.append(tuple(tuple(row) for row in rows))
    return result


def _columnStrictFillings(mu, content):
    """ All fillings with strictly increasing columns and the given content """
    mu = Partition(mu)
    cells = [(i, j) for i in range(mu.length) for j in range(mu[i])]
    letters = []
    for letter, count in enumerate(content):
        letters.extend([letter] * count)
    for assignment in multiset_permutations(letters):
        rows = [[None] * mu[i] for i in range(mu.length)]
        for (i, j), letter in zip(cells, assignment):
            rows[i][j] = letter
        if all(rows[i][j] < rows[i+1][j] for i in range(mu.length - 1) for j in range(mu[i+1])):
            yield tuple(tuple(row) for row in rows)


def bideterminant(shape, rowTableau, colTableau):
    """ Product over the columns of the tableaux of the minors z[rows, cols] """
    result = MatrixPoly.constant(shape, 1)
    width = len(rowTableau[0]) if rowTableau else 0
    for c in range(width):
        rows = [row[c] for row in rowTableau if len(row) > c]
        cols = [row[c] for row in colTableau if len(row) > c]
        result = result * MatrixPoly.minor(shape, rows, cols)
    return result


def _orthogonalize(vector, accepted):
    for basisVector, norm in accepted:
        coefficient = fischerPairing(basisVector, vector)
        if coefficient != 0:
            vector = vector - basisVector * (coefficient / norm)
    return vector


@lru_cache(maxsize=None)
def weightSpaceBasis(shape, rowSums, colSums):
    """
    _weightSpaceBasis_

    {mu: ((vector, gram), ...)} for the monomials with the given row and
    column sums. Shapes are processed in increasing lexicographic order; the
    bideterminants of shape mu span the sum of the P_nu with nu below mu in
    dominance, so the Gram-Schmidt residues against the earlier shapes lie
    in P_mu.
    """
    r, s = shape
    n = sum(rowSums)
    sortedRows = Partition(sorted(rowSums, reverse=True))
    sortedCols = Partition(sorted(colSums, reverse=True))
    accepted = []
    result = {}
    for mu in sorted(partitionsOf(n, min(r, s))):
        if not (mu.dominates(sortedRows) and mu.dominates(sortedCols)):
            continue
        wanted = kostkaNumber(mu, rowSums) * kostkaNumber(mu, colSums)
        if not wanted:
            continue
        vectors = []
        candidates = (bideterminant(shape, t, u) for t, u in product(semistandardTableaux(mu, rowSums),
                                                                   semistandardTableaux(mu, colSums)))
        for _ in range(2):
            for candidate in candidates:
                residue = _orthogonalize(candidate, accepted)
                if residue:
                    entry = (residue, fischerPairing(residue, residue))
                    accepted.append(entry)
                    vectors.append(entry)
                    if len(vectors) == wanted:
                        break
            if len(vectors) == wanted:
                break
            logger.debug("Falling back to column strict fillings for %s in weight %s/%s", mu, rowSums, colSums)
            candidates = (bideterminant(shape, t, u) for t, u in product(_columnStrictFillings(mu, rowSums),
                                                                       _columnStrictFillings(mu, colSums)))
        if len(vectors) != wanted:
            raise NumericalException("Found %d of %d basis vectors of %s in weight %s/%s"
                                     % (len(vectors), wanted, mu, rowSums, colSums))
        result[mu] = tuple(vectors)
    return result


def _compositions(n, parts):
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def isotypeBasis(shape, mu):
    """
    _isotypeBasis_

    Fischer orthogonal basis of P_mu(C^{r x s}), collected over all weight spaces.
    """
    mu = Partition(mu)
    r, s = shape
    if mu.length > min(r, s):
        raise ParameterException("Partition %s is longer than min%s" % (mu, shape))
    vectors, gram = [], []
    for rowSums in _compositions(mu.size, r):
        for colSums in _compositions(mu.size, s):
            for vector, norm in weightSpaceBasis(shape, rowSums, colSums).get(mu, ()):
                vectors.append(vector)
                gram.append(norm)
    return IsotypeBasis(mu, shape, tuple(vectors), tuple(gram))


def isotypicComponents(f):
    """ {mu: pi_mu f} over all nonzero components """
    components = {}
    for (rowSums, colSums), part in f.splitByWeight().items():
        for mu, vectors in weightSpaceBasis(f.shape, rowSums, colSums).items():
            piece = MatrixPoly.zero(f.shape)
            for vector, norm in vectors:
                coefficient = fischerPairing(vector, part)
                if coefficient != 0:
                    piece = piece + vector * (coefficient / norm)
            if piece:
                components[mu] = components[mu] + piece if mu in components else piece
    return components


def isotypicProject(f, mu):
    """
    _isotypicProject_

    pi_mu f, the Fischer orthogonal projection onto P_mu.
    """
    mu = Partition(mu)
    part = f.homogeneousPart(mu.size)
    result = MatrixPoly.zero(f.shape)
    for (rowSums, colSums), piece in part.splitByWeight().items():
        for vector, norm in weightSpaceBasis(f.shape, rowSums, colSums).get(mu, ()):
            coefficient = fischerPairing(vector, piece)
            if coefficient != 0:
                result = result + vector * (coefficient / norm)
    return result


def rankProject(f, ell):
    """ Projection onto the sum of the P_mu with length(mu) <= ell """
    if ell >= min(f.shape):
        return f
    result = MatrixPoly.zero(f.shape)
    for mu, piece in isotypicComponents(f).items():
        if mu.length <= ell:
            result = result + piece
    return result


def typeNorm2(htype, f):
    """
    _typeNorm2_

    Squared norm sum coefficient(mu) ||pi_mu f||^2 in the space of the type.
    Components longer than the rank bound of the type are not in the space.
    """
    total = 0
    for mu, piece in isotypicComponents(f).items():
        if mu.length > htype.ell:
            raise ParameterException("Component %s of the polynomial lies outside the space of rank bound %d" % (mu, htype.ell))
        total += htype.coefficient(mu) * fischerPairing(piece, piece)
    return total
