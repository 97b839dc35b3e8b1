from __future__ import annotations

from collections import defaultdict

import sympy
from tqdm.auto import tqdm as ProgressDisplay

from lefschetzlib.cohomology.euler import BettiVector
from lefschetzlib.cohomology.euler import central_extension_betti
from lefschetzlib.cohomology.euler import chi
from lefschetzlib.cohomology.euler import chi_r
from lefschetzlib.cohomology.euler import chi_r_from_poincare
from lefschetzlib.cohomology.euler import random_betti_vector
from lefschetzlib.cohomology.euler import verify_chichi
from lefschetzlib.group.contraction import check_MA_properties
from lefschetzlib.group.contraction import det_identity
from lefschetzlib.group.contraction import in_AM_tilde
from lefschetzlib.group.contraction import lambda_am
from lefschetzlib.group.contraction import modular_delta_from_adjoint
from lefschetzlib.group.contraction import random_levi_pair
from lefschetzlib.group.root_datum import RootDatum
from lefschetzlib.group.root_datum import modular_delta
from lefschetzlib.padic.valuation import PadicContext
from lefschetzlib.padic.valuation import eigen_abs_values
from lefschetzlib.padic.valuation import lambda_min_max
from lefschetzlib.suite.suite import Suite
from lefschetzlib.utils.exact_linalg import to_rational_matrix
from lefschetzlib.utils.simple_functions import as_rational

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    import random
    from lefschetzlib.group.contraction import LeviPair
    from lefschetzlib.typing import RationalMatrix


def random_unimodular_matrix(n: int, rng: random.Random, steps: int) -> sympy.Matrix:
    """A product of elementary matrices I + k E_ij with small nonzero k"""
    matrix = sympy.eye(n)
    if n < 2:
        return matrix
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        elementary = sympy.eye(n)
        elementary[i, j] = rng.choice([-2, -1, 1, 2])
        matrix = matrix * elementary
    return matrix


def random_valued_diagonal(
    ctx: PadicContext,
    n: int,
    rng: random.Random,
    max_valuation: int,
    max_unit: int,
) -> tuple[sympy.Matrix, list[int]]:
    """diag(±q^v u) with unit u, together with the valuations v"""
    units = [u for u in range(1, max_unit + 1) if u % ctx.q != 0]
    valuations = [rng.randint(-max_valuation, max_valuation) for _ in range(n)]
    entries = [
        rng.choice([1, -1]) * rng.choice(units) * sympy.Rational(ctx.q)**v
        for v in valuations
    ]
    return sympy.diag(*entries), valuations


class NewtonSuite(Suite):
    """
    Absolute values of eigenvalues from Newton polygons. Random cases
    conjugate a diagonal matrix with known valuations by a unimodular
    matrix, so the expected answer is known without computing any root.
    """
    name = "newton"

    def construct(self) -> None:
        config = self.suite_config
        if self.input_path:
            cases = self.load_input_cases()
            self.parameters = dict(input=str(self.input_path), cases=len(cases))
            for index, case in enumerate(cases):
                expected = case.get("expected")
                self.check_matrix(
                    index,
                    PadicContext(int(case["q"])),
                    to_rational_matrix(case["matrix"]),
                    None if expected is None else [as_rational(v) for v in expected],
                )
            return

        count = self.get_case_count(config.cases)
        self.parameters = dict(
            cases=count,
            primes=list(config.primes),
            max_dimension=config.max_dimension,
            max_valuation=config.max_valuation,
        )
        for index in ProgressDisplay(range(count), desc="Newton", disable=not self.show_progress):
            ctx = PadicContext(self.random.choice(config.primes))
            n = self.random.randint(1, config.max_dimension)
            diagonal, valuations = random_valued_diagonal(
                ctx, n, self.random, config.max_valuation, config.max_unit,
            )
            conjugator = random_unimodular_matrix(n, self.random, config.conjugator_steps)
            g = conjugator * diagonal * conjugator.inv()
            self.check_matrix(index, ctx, g, valuations)

    def check_matrix(
        self,
        index: int,
        ctx: PadicContext,
        g: RationalMatrix,
        expected: list | None,
    ) -> None:
        spectrum = eigen_abs_values(ctx, g)
        exponents = spectrum.exponents()
        lam_min, lam_max = lambda_min_max(spectrum)
        inverse_min, inverse_max = lambda_min_max(eigen_abs_values(ctx, g.inv()))
        # lambda_min(g^-1) = 1 / lambda_max(g)
        inverse_ok = inverse_min == -lam_max and inverse_max == -lam_min
        valuations_ok = expected is None or sorted(expected) == exponents
        self.add_row(
            case=index,
            q=ctx.q,
            n=g.shape[0],
            expected=None if expected is None else sorted(sympy.Rational(v) for v in expected),
            valuations=exponents,
            lambda_min=lam_min,
            lambda_max=lam_max,
            inverse_identity=inverse_ok,
            **{"pass": valuations_ok and inverse_ok},
        )


class RegionSuite(Suite):
    """
    Samples am for the configured families, checks the determinant identity
    and the modular character on the chamber, and that elements outside the
    chamber never land in (AM)~. All samples then go through the four
    contraction properties, grouped by group and prime.
    """
    name = "region"

    def construct(self) -> None:
        config = self.suite_config
        families = [RootDatum.from_name(name) for name in config.families]
        count = self.get_case_count(config.cases)
        violations = max(config.min_violations, 0) if count else 0
        self.parameters = dict(
            cases=count,
            families=[rd.name for rd in families],
            primes=list(config.primes),
            max_valuation=config.max_valuation,
            outside_chamber=violations,
        )
        samples: dict[tuple[PadicContext, RootDatum], list[LeviPair]] = defaultdict(list)

        for index in ProgressDisplay(range(count), desc="Chamber", disable=not self.show_progress):
            rd = families[index % len(families)]
            ctx = PadicContext(self.random.choice(config.primes))
            p = random_levi_pair(ctx, rd, self.random, in_chamber=True, max_valuation=config.max_valuation)
            lhs, rhs = det_identity(p)
            delta_ok = modular_delta(p.a, rd) == modular_delta_from_adjoint(p.a, rd)
            tilde = in_AM_tilde(p)
            self.add_sample_row(index, "chamber", p, tilde, lhs, rhs, delta_ok and tilde and lhs == rhs)
            samples[(ctx, rd)].append(p)

        outside_families = [rd for rd in families if rd.simple_roots]
        for index in range(violations if outside_families else 0):
            rd = outside_families[index % len(outside_families)]
            ctx = PadicContext(self.random.choice(config.primes))
            p = random_levi_pair(ctx, rd, self.random, in_chamber=False, max_valuation=config.max_valuation)
            tilde = in_AM_tilde(p)
            self.add_sample_row(index, "outside_chamber", p, tilde, None, None, not tilde)
            samples[(ctx, rd)].append(p)

        for (ctx, rd), group_samples in samples.items():
            report = check_MA_properties(ctx, rd, group_samples, show_progress=self.show_progress)
            for name, result in report.results.items():
                self.checks[f"{rd.name} q={ctx.q} {name}"] = result.passed

    def add_sample_row(self, index, kind, p, tilde, lhs, rhs, passed) -> None:
        self.add_row(
            case=index,
            kind=kind,
            group=p.rd.name,
            q=p.ctx.q,
            valuations=list(p.a.val_vector),
            lambda_exponent=lambda_am(p),
            in_AM_tilde=tilde,
            det_lhs=lhs,
            det_rhs=rhs,
            **{"pass": passed},
        )


class EulerSuite(Suite):
    """chi(Lambda) = chi_r(Gamma) for central Z^r extensions"""
    name = "euler"

    def construct(self) -> None:
        config = self.suite_config
        for r in range(config.binomial_rank_limit + 1):
            self.checks[f"chi_{r}(Z^{r}) = 1"] = chi_r(central_extension_betti([1], r), r) == 1

        if self.input_path:
            cases = [
                (BettiVector(case["betti"]), int(case["r"]))
                for case in self.load_input_cases()
            ]
            self.parameters = dict(input=str(self.input_path), cases=len(cases))
        else:
            count = self.get_case_count(config.cases)
            self.parameters = dict(
                cases=count,
                max_length=config.max_length,
                max_entry=config.max_entry,
                ranks=list(config.ranks),
            )
            cases = [
                (
                    random_betti_vector(self.random, config.max_length, config.max_entry),
                    self.random.choice(config.ranks),
                )
                for _ in range(count)
            ]

        for index, (b, r) in enumerate(ProgressDisplay(cases, desc="Euler", disable=not self.show_progress)):
            extension = central_extension_betti(b, r)
            higher = chi_r(extension, r)
            poincare_ok = higher == chi_r_from_poincare(extension, r)
            self.add_row(
                case=index,
                betti=list(b),
                r=r,
                chi=chi(b),
                chi_r_extension=higher,
                poincare_agrees=poincare_ok,
                **{"pass": verify_chichi(b, r) and poincare_ok},
            )
