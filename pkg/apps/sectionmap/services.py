"""
The hyperplane section map of a smooth hypersurface X = {F = 0}: which
hyperplanes are tangent, the linear syzygies of the partials, and the
tangent-level kernel compared against multiplication by L on the Jacobian
ring.

Hyperplanes are linear forms L. Computations that need L = x0 first move F
into adapted coordinates with ``coordinates_sending_L_to_X0``.
"""
from dataclasses import dataclass, field as dataclass_field
import logging

from django.conf import settings
from django.db import models

from apps.exactla.matrix import ExactMatrix, kernel_basis, reduce_vector, row_basis, solve
from apps.jacobian.exceptions import GenericSampleError
from apps.jacobian.ring import GradedIdeal, JacobianRingModel
from apps.jacobian.services import SmoothnessStatus, random_smooth_form, smoothness_check
from apps.lefschetz.services import multiplication_map
from apps.multipoly.monomials import monomials_of_degree, ring_dimension
from apps.multipoly.parser import parse_polynomial
from apps.multipoly.polynomial import Polynomial
from apps.multipoly.sampling import derive_seed, random_linear_form
from apps.multipoly.transforms import (
    change_of_coordinates,
    coordinates_sending_L_to_X0,
    restrict_to_hyperplane,
)

from .exceptions import (
    SectionMapError,
    SingularHypersurfaceError,
    SingularSectionError,
    SmoothnessUndecidedError,
    UnsupportedShapeError,
)

logger = logging.getLogger(__name__)


def _from_columns(field, columns, height):
    rows = [[column[i] for column in columns] for i in range(height)]
    return ExactMatrix.from_rows(field, rows, len(columns))


def _unit(num_vars, j):
    return tuple(1 if k == j else 0 for k in range(num_vars))


def _is_multiple_of(P, G):
    """P == c·G for some scalar c (including c = 0)."""
    if P.is_zero():
        return True
    field = G.field
    mono, coeff = next(iter(G.terms.items()))
    return P == G.scale(field.div(P.coefficient(mono), coeff))


# -- smoothness preconditions ------------------------------------------------

def _require_smooth(F):
    verdict = smoothness_check(F)
    if verdict.status == SmoothnessStatus.UNKNOWN:
        raise SmoothnessUndecidedError(f'smoothness of {F} undecided up to degree {verdict.detail}')
    if verdict.status == SmoothnessStatus.SINGULAR:
        raise SingularHypersurfaceError(f'{F} defines a singular hypersurface')


def _section_is_singular(F, L):
    S = restrict_to_hyperplane(F, L)
    if S.is_zero():
        return True
    verdict = smoothness_check(S)
    if verdict.status == SmoothnessStatus.UNKNOWN:
        raise SmoothnessUndecidedError(f'smoothness of the section {S} undecided up to degree {verdict.detail}')
    logger.debug(f'section of {F} by {L}: {S} is {verdict.status}')
    return not verdict.is_smooth


def _require_cubic_threefold(F):
    if F.num_vars != 5 or not F.is_homogeneous() or F.degree != 3:
        raise UnsupportedShapeError(
            f'need a cubic form in 5 variables, got degree {F.degree} in {F.num_vars} variables'
        )


def dual_membership(F, L):
    """True iff the hyperplane L = 0 is tangent to X, i.e. X ∩ H is singular."""
    _require_smooth(F)
    return _section_is_singular(F, L)


# -- Koszul relations among the partials -------------------------------------

@dataclass(frozen=True)
class KoszulRelation:
    """Linear forms M_i with sum M_i·F'_i = multiple·F."""
    multipliers: tuple
    multiple: object

    def holds(self, F):
        total = Polynomial.zero(F.field, F.num_vars)
        for i, M in enumerate(self.multipliers):
            total = total + M * F.derivative(i)
        return total == F.scale(self.multiple)


def koszul_linear_relations(F, modulo_form=True):
    """
    Basis of the linear-form relations among the partials of F. With
    ``modulo_form`` the target is R_d / span{F}, where the Euler tuple
    (x0, ..., xn) is a relation.
    """
    d = F.homogeneous_degree()
    field = F.field
    nv = F.num_vars
    partials = [F.derivative(i) for i in range(nv)]
    columns = [
        (Polynomial.variable(field, nv, k) * partials[i]).to_vector(d)
        for i in range(nv) for k in range(nv)
    ]
    if modulo_form:
        columns.append(F.to_vector(d))
    matrix = _from_columns(field, columns, ring_dimension(nv, d))
    relations = []
    for v in kernel_basis(matrix):
        multipliers = tuple(Polynomial.linear(field, v[i * nv:(i + 1) * nv]) for i in range(nv))
        multiple = field.neg(v[-1]) if modulo_form else field.zero
        relations.append(KoszulRelation(multipliers, multiple))
    logger.debug(f'{F}: {len(relations)} linear relations among the partials')
    return relations


def is_euler_only(relations):
    """True iff ``relations`` span exactly the line of the Euler tuple."""
    if len(relations) != 1:
        return False
    multipliers = relations[0].multipliers
    field = multipliers[0].field
    nv = len(multipliers)
    c = multipliers[0].coefficient(_unit(nv, 0))
    if c == 0:
        return False
    return all(M == Polynomial.variable(field, nv, i).scale(c) for i, M in enumerate(multipliers))


# -- vector fields and the tangent kernel ------------------------------------

def vector_field_slots(num_vars):
    """
    Coordinates (i, j) = coefficient of x_j in the i-th component, for
    j >= 1. The slot (1, 1) is dropped: the relation (0, x1, ..., xn) is
    normalized to zero there.
    """
    return [(i, j) for i in range(num_vars) for j in range(1, num_vars) if (i, j) != (1, 1)]


@dataclass(frozen=True)
class VectorField:
    """sum L_i d/dx_i with every L_i a linear form in x1..xn."""
    components: tuple

    def __post_init__(self):
        for L in self.components:
            if L.coefficient(_unit(L.num_vars, 0)) != 0:
                raise SectionMapError(f'vector field component {L} involves x0')

    @classmethod
    def from_slots(cls, field, num_vars, vector):
        coefficients = [[field.zero] * num_vars for _ in range(num_vars)]
        for (i, j), c in zip(vector_field_slots(num_vars), vector):
            coefficients[i][j] = c
        return cls(tuple(Polynomial.linear(field, row) for row in coefficients))

    @property
    def num_vars(self):
        return len(self.components)

    def slot_vector(self):
        """Coordinates modulo the relation, on ``vector_field_slots``."""
        nv = self.num_vars
        field = self.components[0].field
        shift = self.components[1].coefficient(_unit(nv, 1))
        out = []
        for i, j in vector_field_slots(nv):
            c = self.components[i].coefficient(_unit(nv, j))
            out.append(field.sub(c, shift) if i == j else c)
        return tuple(out)

    def is_zero(self):
        return all(c == 0 for c in self.slot_vector())

    def apply(self, G):
        """sum L_i·G'_i."""
        total = Polynomial.zero(G.field, G.num_vars)
        for i, L in enumerate(self.components):
            if not L.is_zero():
                total = total + L * G.derivative(i)
        return total

    def __str__(self):
        pieces = [f'({L})*d/dx{i}' for i, L in enumerate(self.components) if not L.is_zero()]
        return ' + '.join(pieces) or '0'


@dataclass(frozen=True)
class TangentKernelReport:
    """
    Kernel of V -> [sum L_i·G'_i] in R_d / (x0·R_{d-1} + span{G}), where G
    is F in coordinates with L = x0. certificates[k] = (Q, c) satisfies
    sum L_i·G'_i = x0·Q + c·G for basis[k].
    """
    form: Polynomial
    coordinates: ExactMatrix
    basis: tuple
    certificates: tuple

    @property
    def dimension(self):
        return len(self.basis)

    def contains(self, V):
        field = self.form.field
        rows = [b.slot_vector() for b in self.basis]
        reduced, pivots = row_basis(field, rows, len(vector_field_slots(self.form.num_vars)))
        residual = reduce_vector(field, V.slot_vector(), reduced.entries, pivots)
        return all(x == 0 for x in residual)

    def certificate_holds(self, k):
        V = self.basis[k]
        Q, c = self.certificates[k]
        G = self.form
        x0 = Polynomial.variable(G.field, G.num_vars, 0)
        return (V.apply(G) - x0 * Q - G.scale(c)).is_zero()


def adapted_form(F, L):
    """(A, F∘A) where A sends L to x0."""
    A = coordinates_sending_L_to_X0(L)
    return A, change_of_coordinates(F, A)


def _solve_certificate(G, P):
    """(Q, c) with P = x0·Q + c·G."""
    field = G.field
    nv = G.num_vars
    d = G.degree
    x0 = Polynomial.variable(field, nv, 0)
    quadrics = monomials_of_degree(nv, d - 1)
    columns = [(x0 * Polynomial(field, nv, {m: 1})).to_vector(d) for m in quadrics]
    columns.append(G.to_vector(d))
    system = _from_columns(field, columns, ring_dimension(nv, d))
    solution = solve(system, P.to_vector(d))
    if solution is None:
        raise SectionMapError(f'{P} is not in x0·R_{d - 1} + span{{{G}}}')
    Q = Polynomial(field, nv, dict(zip(quadrics, solution[:-1])))
    return Q, solution[-1]


def _tangent_kernel(F, L):
    A, G = adapted_form(F, L)
    field = G.field
    nv = G.num_vars
    d = G.degree
    x0 = Polynomial.variable(field, nv, 0)
    codomain = GradedIdeal(field, nv, [x0, G]).piece(d)
    partials = [G.derivative(i) for i in range(nv)]
    columns = []
    for i, j in vector_field_slots(nv):
        image = (Polynomial.variable(field, nv, j) * partials[i]).to_vector(d)
        reduced = reduce_vector(field, image, codomain.basis.entries, codomain.pivots)
        columns.append([reduced[c] for c in codomain.standard_columns])
    phi = _from_columns(field, columns, len(codomain.standard_columns))
    basis = tuple(VectorField.from_slots(field, nv, v) for v in kernel_basis(phi))
    certificates = tuple(_solve_certificate(G, V.apply(G)) for V in basis)
    report = TangentKernelReport(form=G, coordinates=A, basis=basis, certificates=certificates)
    logger.debug(f'tangent kernel of {F} along {L}: dimension {report.dimension}')
    return report


def tangent_kernel(F, L):
    _require_cubic_threefold(F)
    _require_smooth(F)
    if _section_is_singular(F, L):
        raise SingularSectionError(f'the hyperplane {L} = 0 is tangent to {F} = 0')
    return _tangent_kernel(F, L)


# -- crosschecks between the two kernels -------------------------------------

@dataclass(frozen=True)
class TangentToClassCertificate:
    """
    From V in the tangent kernel: x0·Q vanishes in degree d while Q does not.
    ``multiple`` is the coefficient c of G in sum L_i·G'_i = x0·Q + c·G.
    """
    vector_field: VectorField
    quadric: Polynomial
    multiple: object
    degree: int
    identity_holds: bool
    product_vanishes: bool
    class_nonzero: bool

    @property
    def scalar(self):
        """a with c = d·a, or None when the characteristic divides d."""
        field = self.quadric.field
        d = field.element(self.degree)
        if d == 0:
            return None
        return field.div(self.multiple, d)

    @property
    def valid(self):
        return self.identity_holds and self.product_vanishes and self.class_nonzero


@dataclass(frozen=True)
class ClassToTangentCertificate:
    """From [Q] with x0·Q in J: an x0-free V with x0·Q' - sum L_i·G'_i in span{G}."""
    kernel_class: Polynomial
    normalized_class: Polynomial
    vector_field: VectorField
    identity_holds: bool
    field_nonzero: bool
    field_in_kernel: bool

    @property
    def valid(self):
        return self.identity_holds and self.field_nonzero and self.field_in_kernel


@dataclass(frozen=True)
class CrosscheckReport:
    wlp_kernel_dimension: int
    adapted_wlp_kernel_dimension: int
    tangent: TangentKernelReport
    tangent_to_class: tuple
    class_to_tangent: tuple

    @property
    def tangent_kernel_dimension(self):
        return self.tangent.dimension

    @property
    def equivalence_holds(self):
        return (self.wlp_kernel_dimension == 0) == (self.tangent_kernel_dimension == 0)

    @property
    def certificates_valid(self):
        return (
            self.wlp_kernel_dimension == self.adapted_wlp_kernel_dimension
            and all(c.valid for c in self.tangent_to_class)
            and all(c.valid for c in self.class_to_tangent)
        )

    @property
    def passed(self):
        return self.equivalence_holds and self.certificates_valid


def _class_to_tangent(G, Q, tangent):
    field = G.field
    nv = G.num_vars
    d = G.degree
    x0 = Polynomial.variable(field, nv, 0)
    partials = [G.derivative(i) for i in range(nv)]
    columns = [
        (Polynomial.variable(field, nv, k) * partials[i]).to_vector(d)
        for i in range(nv) for k in range(nv)
    ]
    system = _from_columns(field, columns, ring_dimension(nv, d))
    solution = solve(system, (x0 * Q).to_vector(d))
    if solution is None:
        raise SectionMapError(f'x0·({Q}) is not in the Jacobian ideal')
    # split M_i = a_i·x0 + L_i and move the x0 parts into Q
    normalized = Q
    components = []
    for i in range(nv):
        row = list(solution[i * nv:(i + 1) * nv])
        normalized = normalized - partials[i].scale(row[0])
        row[0] = field.zero
        components.append(Polynomial.linear(field, row))
    V = VectorField(tuple(components))
    return ClassToTangentCertificate(
        kernel_class=Q,
        normalized_class=normalized,
        vector_field=V,
        identity_holds=_is_multiple_of(x0 * normalized - V.apply(G), G),
        field_nonzero=not V.is_zero(),
        field_in_kernel=tangent.contains(V),
    )


def _crosscheck(F, L):
    jr = JacobianRingModel(F)
    wlp = multiplication_map(jr, L, 2)
    tangent = _tangent_kernel(F, L)
    G = tangent.form
    adapted = JacobianRingModel(G)
    x0 = Polynomial.variable(G.field, G.num_vars, 0)
    adapted_wlp = multiplication_map(adapted, x0, 2)

    tangent_to_class = []
    for k, V in enumerate(tangent.basis):
        Q, c = tangent.certificates[k]
        tangent_to_class.append(TangentToClassCertificate(
            vector_field=V,
            quadric=Q,
            multiple=c,
            degree=G.degree,
            identity_holds=tangent.certificate_holds(k),
            product_vanishes=adapted.is_zero_class(x0 * Q, 3),
            class_nonzero=not Q.is_zero() and not adapted.is_zero_class(Q, 2),
        ))
    class_to_tangent = [_class_to_tangent(G, Q, tangent) for Q in adapted_wlp.kernel_polynomials()]

    report = CrosscheckReport(
        wlp_kernel_dimension=wlp.kernel_dimension,
        adapted_wlp_kernel_dimension=adapted_wlp.kernel_dimension,
        tangent=tangent,
        tangent_to_class=tuple(tangent_to_class),
        class_to_tangent=tuple(class_to_tangent),
    )
    if not report.passed:
        logger.error(f'crosscheck failed for {F} along {L}: wlp kernel {report.wlp_kernel_dimension}, '
                     f'tangent kernel {report.tangent_kernel_dimension}')
    return report, wlp, jr


def crosscheck_report(F, L):
    _require_cubic_threefold(F)
    _require_smooth(F)
    if _section_is_singular(F, L):
        raise SingularSectionError(f'the hyperplane {L} = 0 is tangent to {F} = 0')
    return _crosscheck(F, L)[0]


def proposition_crosscheck(F, L):
    """
    True iff ×L on degree 2 is injective exactly when the tangent kernel
    vanishes, with every certificate in both directions verified.
    """
    return crosscheck_report(F, L).passed


# -- verdicts ------------------------------------------------------------------

class EtaleStatus(models.TextChoices):
    ETALE = 'etale', 'Etale'
    NOT_ETALE = 'not_etale', 'Not etale'
    SECTION_SINGULAR = 'section_singular', 'Section singular'


@dataclass(frozen=True)
class EtaleVerdict:
    status: str
    wlp_kernel_dimension: int = None
    tangent_kernel_dimension: int = None
    crosscheck_passed: bool = None
    # dim of the Jacobian ring in degrees 2 and 3
    jacobian_dimensions: dict = dataclass_field(default_factory=dict)
    wlp_kernel: tuple = ()
    tangent_kernel: tuple = ()

    @property
    def is_etale(self):
        return self.status == EtaleStatus.ETALE


def etale_check(F, L):
    """
    Whether the section map is étale at H = {L = 0}: SectionSingular when H
    is tangent, otherwise decided by injectivity of ×L from degree 2 to 3.
    """
    _require_cubic_threefold(F)
    _require_smooth(F)
    if _section_is_singular(F, L):
        logger.info(f'{L} = 0 is tangent to {F} = 0')
        return EtaleVerdict(status=EtaleStatus.SECTION_SINGULAR)
    report, wlp, jr = _crosscheck(F, L)
    status = EtaleStatus.ETALE if wlp.is_injective else EtaleStatus.NOT_ETALE
    logger.info(f'{F} along {L}: {status} (wlp kernel {report.wlp_kernel_dimension}, '
                f'tangent kernel {report.tangent_kernel_dimension})')
    return EtaleVerdict(
        status=status,
        wlp_kernel_dimension=report.wlp_kernel_dimension,
        tangent_kernel_dimension=report.tangent_kernel_dimension,
        crosscheck_passed=report.passed,
        jacobian_dimensions={2: jr.hilbert_value(2), 3: jr.hilbert_value(3)},
        wlp_kernel=tuple(wlp.kernel_polynomials()),
        tangent_kernel=report.tangent.basis,
    )


@dataclass(frozen=True)
class UnramifiedVerdict:
    unramified: bool
    degree: int
    kernel_dimension: int
    source_dimension: int
    target_dimension: int
    kernel: tuple = ()


def unramified_check(F, L):
    """Injectivity of ×L from degree d-1 to d, for any smooth F of degree d >= 3."""
    d = F.homogeneous_degree()
    if d < 3 or F.num_vars < 4:
        raise UnsupportedShapeError(f'need d >= 3 in at least 4 variables, got ({F.num_vars}, {d})')
    _require_smooth(F)
    if _section_is_singular(F, L):
        raise SingularSectionError(f'the hyperplane {L} = 0 is tangent to {F} = 0')
    mm = multiplication_map(JacobianRingModel(F), L, d - 1)
    return UnramifiedVerdict(
        unramified=mm.is_injective,
        degree=d - 1,
        kernel_dimension=mm.kernel_dimension,
        source_dimension=len(mm.source_basis),
        target_dimension=len(mm.target_basis),
        kernel=tuple(mm.kernel_polynomials()),
    )


# -- Fermat sections -----------------------------------------------------------

@dataclass(frozen=True)
class SylvesterForm:
    """X ∩ H for the Fermat cubic as a sum of cubes of linear forms on H."""
    hyperplane: Polynomial
    cubes: tuple
    section: Polynomial

    @property
    def matches(self):
        total = Polynomial.zero(self.section.field, self.section.num_vars)
        for M in self.cubes:
            total = total + M ** 3
        return total == self.section


def sylvester_section(L):
    """
    Express the section of x0^3 + ... + xn^3 by L = 0 as a sum of n+1 cubes
    in the remaining variables.
    """
    field = L.field
    nv = L.num_vars
    fermat = parse_polynomial(' + '.join(f'x{i}^3' for i in range(nv)), field, nv)
    _require_smooth(fermat)
    if _section_is_singular(fermat, L):
        raise SingularSectionError(f'the hyperplane {L} = 0 is tangent to the Fermat cubic')
    cubes = tuple(restrict_to_hyperplane(Polynomial.variable(field, nv, i), L) for i in range(nv))
    return SylvesterForm(hyperplane=L, cubes=cubes, section=restrict_to_hyperplane(fermat, L))


# -- sampling and batches --------------------------------------------------------

def random_section_pair(field, seed, num_vars=5, d=3, trials=None):
    """A smooth form F and a hyperplane L whose section is smooth."""
    if trials is None:
        trials = getattr(settings, 'GENERIC_TRIAL_BUDGET', 20)
    F = random_smooth_form(num_vars, d, field, derive_seed(seed, 0), trials)
    for t in range(trials):
        L = random_linear_form(num_vars, field, derive_seed(seed, t + 1))
        if not _section_is_singular(F, L):
            return F, L
    raise GenericSampleError(f'no hyperplane with smooth section for {F} after {trials} samples')


@dataclass(frozen=True)
class BatteryRecord:
    index: int
    form: Polynomial
    hyperplane: Polynomial
    wlp_kernel_dimension: int
    tangent_kernel_dimension: int
    equivalence_holds: bool
    certificates_valid: bool


@dataclass(frozen=True)
class BatteryReport:
    field: object
    seed: int
    records: tuple

    @property
    def agreements(self):
        return sum(1 for r in self.records if r.equivalence_holds)

    @property
    def passed(self):
        return all(r.equivalence_holds and r.certificates_valid for r in self.records)


def proposition_battery(field, samples, seed):
    """Crosscheck ``samples`` random (F, L) pairs; pair i uses derive_seed(seed, i)."""
    records = []
    for i in range(samples):
        F, L = random_section_pair(field, derive_seed(seed, i))
        report = _crosscheck(F, L)[0]
        records.append(BatteryRecord(
            index=i,
            form=F,
            hyperplane=L,
            wlp_kernel_dimension=report.wlp_kernel_dimension,
            tangent_kernel_dimension=report.tangent_kernel_dimension,
            equivalence_holds=report.equivalence_holds,
            certificates_valid=report.certificates_valid,
        ))
    battery = BatteryReport(field=field, seed=seed, records=tuple(records))
    logger.info(f'crosscheck battery over {field.label}: {battery.agreements}/{samples} agree')
    return battery
