"""
Handlers for the command-line subcommands.

Each handler takes the parsed ``argparse`` namespace and returns a
``CommandResult``: text for standard output, a structured report for
``--output`` and an exit code. Handlers raise the toolkit's exceptions; turning
them into exit codes is left to ``src.__main__``.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List

from src.algebra.rings import MultivariatePolynomialRing, RationalPolynomialRing
from src.bockstein.comparison import ptop2_check
from src.bockstein.spectral import bockstein_tables, recover_integral, relevant_primes
from src.complexes.random_complexes import generate_corpus
from src.filtrations.builder_factory import FiltrationFactory
from src.filtrations.graph import graph_to_filtration
from src.filtrations.wrs import check_ideal_equivalence
from src.formats.complex_file import read_complex, read_filtration, write_complex, write_filtration
from src.formats.report import format_table
from src.formats.text_files import read_graph, read_simplex_list
from src.formats.validators import validate_degree, validate_max_dim, validate_page, validate_power, validate_prime, validate_step
from src.homology.coefficients import base_ring_for, parse_coefficients
from src.homology.groups import homology
from src.mayer_vietoris.sequence import build_mv, verify_exactness
from src.scripts.persistence_table import persistence_table, single_persistence

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """Data class to hold what a subcommand produced."""
    text: str
    report: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0


def run_validate(args) -> CommandResult:
    K = read_complex(args.complex, close=args.close_faces)
    report = K.validate()
    lines = [f"valid: {'yes' if report.is_valid else 'no'}", f"simplices: {len(K)}", f"dimension: {K.dimension}"]
    lines += [f"missing face {K.label(face)} of {K.label(s)}" for s, face in report.closure_violations]
    lines += [f"w{K.label(face)} does not divide w{K.label(s)}" for face, s in report.divisibility_violations]
    lines += [f"warning: {K.label(s)} has weight zero" for s in report.zero_weight_warnings]
    data = {'command': 'validate', 'input': args.complex, 'valid': report.is_valid, 'simplices': len(K), 'dimension': K.dimension,
            'closure_violations': [[K.label(s), K.label(f)] for s, f in report.closure_violations],
            'divisibility_violations': [[K.label(f), K.label(s)] for f, s in report.divisibility_violations],
            'zero_weights': [K.label(s) for s in report.zero_weight_warnings]}
    return CommandResult("\n".join(lines), data, 0 if report.is_valid else 1)


def run_homology(args) -> CommandResult:
    K = read_complex(args.complex, close=args.close_faces)
    K.require_valid()
    coeff = parse_coefficients(args.coeff, K.ring)
    result = homology(K, coeff)
    data = {'command': 'homology', 'input': args.complex, 'coefficients': coeff.label,
            'groups': {f"H{n}": result.module(n).format() for n in result.degrees}}
    return CommandResult(result.format(), data)


def run_persist(args) -> CommandResult:
    F = read_filtration(args.filtration)
    if isinstance(F.complex.ring, MultivariatePolynomialRing):
        logger.info(f"Sending the variables of {F.complex.ring.symbol} to x for persistence")
        F = F.specialize_weights()
    coeff = parse_coefficients(args.coeff, F.complex.ring)
    if args.all:
        rows = persistence_table(F, coeff, args.max_workers)
    else:
        validate_degree(args.k)
        validate_step(F, args.i, args.q)
        rows = [single_persistence(F, coeff, args.k, args.i, args.q)]
    text = format_table(["k", "i", "q", "group"], [(r.k, r.i, r.q, r.group) for r in rows])
    data = {'command': 'persist', 'input': args.filtration, 'coefficients': coeff.label,
            'rows': [{'k': r.k, 'i': r.i, 'q': r.q, 'group': r.group, 'free_rank': r.free_rank, 'torsion': r.torsion} for r in rows]}
    return CommandResult(text, data)


def default_prime(ring) -> Any:
    """Prime tabulated when the homology has no torsion: 2, or the variable over ℚ[x]."""
    if isinstance(ring, RationalPolynomialRing):
        return ring.parse(str(ring.gen))
    return 2


def run_bockstein(args) -> CommandResult:
    K = read_complex(args.complex, close=args.close_faces)
    K.require_valid()
    ring = base_ring_for(K.ring)
    if args.max_page is not None:
        validate_page(args.max_page)
    relevant = relevant_primes(K)
    if args.prime:
        primes = [validate_prime(p, ring) for p in args.prime]
    else:
        primes = relevant or [default_prime(ring)]
        logger.info(f"Using primes {[ring.format(p) for p in primes]}")
    tables = bockstein_tables(K, primes, args.max_page, args.max_workers)
    lines = []
    for table in tables:
        lines.append(f"p = {table.prime_label} (stable from page {table.r_stab})")
        header = ["page"] + [f"dim E{n}" for n in range(K.dimension + 1)] + [f"rank d({n})" for n in range(1, K.dimension + 1)]
        rows = [[r] + [table.dimension(r, n) for n in range(K.dimension + 1)] + [table.rank(r, n) for n in range(1, K.dimension + 1)] for r in table.pages]
        rows.append(["inf"] + [table.infinity.get(n, 0) for n in range(K.dimension + 1)] + [0] * K.dimension)
        lines.append(format_table(header, rows))
    data: Dict[str, Any] = {'command': 'bockstein', 'input': args.complex, 'relevant_primes': [ring.format(p) for p in relevant],
                            'tables': [t.to_dict() for t in tables]}
    if args.recover:
        recovered = recover_integral(tables, primes=relevant)
        lines.append(f"recovered: {recovered.format()}")
        data['recovered'] = {f"H{n}": recovered.module(n).format() for n in sorted(recovered.modules)}
    return CommandResult("\n".join(lines), data)


def run_mv(args) -> CommandResult:
    K = read_complex(args.complex, close=args.close_faces)
    K.require_valid()
    coeff = parse_coefficients(args.coeff, K.ring)
    k0 = read_simplex_list(args.k0, K)
    k1 = read_simplex_list(args.k1, K)
    seq = build_mv(K, k0, k1, coeff)
    exactness = verify_exactness(seq)
    checks = {c.position: c for c in exactness.checks}
    rows = [(name, group.format(), "yes" if checks[name].ok else "no") for name, group in seq.terms()]
    text = format_table(["term", "group", "exact"], rows) + f"\nexact: {'yes' if exactness.is_exact else 'no'}"
    data = {'command': 'mv', 'input': args.complex, 'coefficients': coeff.label, 'exact': exactness.is_exact,
            'terms': [{'term': name, 'group': group, 'exact': ok} for name, group, ok in rows],
            'failures': [c.position for c in exactness.failures]}
    return CommandResult(text, data, 0 if exactness.is_exact else 1)


def run_filtration(args) -> CommandResult:
    K = read_complex(args.complex, close=args.close_faces)
    K.require_valid()
    builder = FiltrationFactory.create_builder(args.construction)
    options: Dict[str, Any] = {}
    if args.construction == 'ideal-chain':
        options['chain'] = [[K.ring.parse(g) for g in ideal.split(',')] for ideal in args.ideal or []]
    result = builder.run(K, **options)
    text = write_filtration(result.filtration, args.out)
    data = {'command': 'filtration', 'input': args.complex, 'construction': result.name, 'num_steps': result.num_steps}
    if args.construction == 'wrs' and args.check_equivalence:
        data['ideal_chain_agrees'] = check_ideal_equivalence(K)
    return CommandResult(text.rstrip("\n") if not args.out else f"{result.name} filtration with {result.num_steps} steps written to {args.out}", data)


def run_graph2filtration(args) -> CommandResult:
    validate_max_dim(args.max_dim)
    graph = read_graph(args.graph)
    F = graph_to_filtration(graph, args.max_dim, args.order)
    text = write_filtration(F, args.out)
    data = {'command': 'graph2filtration', 'input': args.graph, 'order': args.order, 'max_dim': args.max_dim, 'num_steps': F.num_steps,
            'thresholds': F.thresholds}
    return CommandResult(text.rstrip("\n") if not args.out else f"Filtration with {F.num_steps} steps written to {args.out}", data)


def run_ptop2(args) -> CommandResult:
    F = read_filtration(args.filtration)
    validate_degree(args.k)
    validate_step(F, args.i, args.q)
    validate_power(args.power)
    ring = base_ring_for(F.complex.ring)
    p = validate_prime(args.prime, ring)
    report = ptop2_check(F, args.k, args.i, args.q, p, args.power)
    lines = [f"theta_{args.k}: injective {report.theta_k.is_injective}, surjective {report.theta_k.is_surjective}",
             f"epsilon_{args.k}: injective {report.epsilon_k.is_injective}, surjective {report.epsilon_k.is_surjective}",
             f"hypothesis (degree k-1): {report.hypothesis_prev}",
             f"hypothesis (degree k): {report.hypothesis_next}",
             f"persistence group mod p^{2 * args.power}: {report.persistence_square}",
             f"target group mod p^{2 * args.power}: {report.target_square}",
             f"conclusion: {report.conclusion}",
             f"verdict: {report.verdict}"]
    data = {'command': 'ptop2', 'input': args.filtration, **report.to_dict()}
    return CommandResult("\n".join(lines), data, 0 if report.consistent else 1)


def run_corpus(args) -> CommandResult:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: List[str] = []
    for n, K in enumerate(generate_corpus(args.seed, args.count)):
        path = out_dir / f"complex_{n:04d}.json"
        write_complex(K, str(path))
        written.append(str(path))
    data = {'command': 'corpus', 'seed': args.seed, 'count': args.count, 'files': written}
    return CommandResult(f"Wrote {len(written)} complexes to {out_dir}", data)


COMMANDS: Dict[str, Callable[[Any], CommandResult]] = {
    'validate': run_validate,
    'homology': run_homology,
    'persist': run_persist,
    'bockstein': run_bockstein,
    'mv': run_mv,
    'filtration': run_filtration,
    'graph2filtration': run_graph2filtration,
    'ptop2': run_ptop2,
    'corpus': run_corpus,
}
