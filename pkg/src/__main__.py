import argparse
import logging
import sys
from pathlib import Path

from src.config import APP_NAME, ERROR_LOG_DIR, LOG_DIR, MAX_WORKERS
from src.exceptions import ParseError, SemanticError
from src.filtrations.builder_factory import FiltrationFactory
from src.formats.report import write_report
from src.scripts.commands import COMMANDS
from src.utils.global_logger import get_failure_logger
from src.utils.logging_config import setup_logging

EXIT_SEMANTIC = 1
EXIT_PARSE = 2


def ensure_directories_exist():
    """Ensure all required directories exist."""
    for dir_path in (LOG_DIR, ERROR_LOG_DIR):
        Path(dir_path).mkdir(parents=True, exist_ok=True)


def _input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--close-faces', action='store_true', help='Add missing faces with weight 1 before computing')


def build_parser() -> argparse.ArgumentParser:
    """Parse all command line arguments."""
    parser = argparse.ArgumentParser(prog='weighted_homology', description='Weighted simplicial and persistent homology toolkit')
    parser.add_argument('--debug', action='store_true', help='Enable debug logging')
    parser.add_argument('--output', help='Also write a JSON report to this file')
    parser.add_argument('--max-workers', type=int, default=MAX_WORKERS, help='Worker threads for persist --all and per-prime tables')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('validate', help='Check face closure and weight divisibility')
    p.add_argument('complex')
    _input_options(p)

    p = sub.add_parser('homology', help='Weighted homology of a complex')
    p.add_argument('complex')
    p.add_argument('--coeff', default='z', help='z | q | fp:<p> | zmod:<m> | poly | polymod:<pi>^<r>')
    _input_options(p)

    p = sub.add_parser('persist', help='Weighted persistent homology of a filtration')
    p.add_argument('filtration')
    p.add_argument('--coeff', default='z')
    p.add_argument('--k', type=int, default=0)
    p.add_argument('--i', type=int, default=0)
    p.add_argument('--q', type=int, default=0)
    p.add_argument('--all', action='store_true', help='Tabulate every (k, i, q)')

    p = sub.add_parser('bockstein', help='Bockstein spectral sequence tables')
    p.add_argument('complex')
    p.add_argument('--prime', action='append', help='Prime (or irreducible polynomial); repeatable. Defaults to the torsion primes')
    p.add_argument('--max-page', type=int)
    p.add_argument('--recover', action='store_true', help='Reassemble integral homology from the tables')
    _input_options(p)

    p = sub.add_parser('mv', help='Mayer-Vietoris sequence of a cover and its exactness')
    p.add_argument('complex')
    p.add_argument('--k0', required=True, help='File listing the simplices of the first part')
    p.add_argument('--k1', required=True, help='File listing the simplices of the second part')
    p.add_argument('--coeff', default='z')
    _input_options(p)

    p = sub.add_parser('filtration', help='Build a filtration of a weighted complex')
    p.add_argument('construction', choices=FiltrationFactory.get_supported_constructions())
    p.add_argument('complex')
    p.add_argument('--ideal', action='append', help='Comma-separated generators of one ideal of the chain; repeat in descending order')
    p.add_argument('--check-equivalence', action='store_true', help='Compare WRS births with the ideal chain of the weights')
    p.add_argument('--out', help='Filtration file to write (default: stdout)')
    _input_options(p)

    p = sub.add_parser('graph2filtration', help='Weighted clique complex of a graph with its WRS filtration')
    p.add_argument('graph')
    p.add_argument('--order', choices=['asc', 'desc'], default='desc')
    p.add_argument('--max-dim', type=int, default=2)
    p.add_argument('--out', help='Filtration file to write (default: stdout)')

    p = sub.add_parser('ptop2', help='Compare mod p and mod p^2 persistence at (k, i, q)')
    p.add_argument('filtration')
    p.add_argument('--prime', required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--i', type=int, required=True)
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--power', type=int, default=1, help='Compare p^r with p^(2r)')

    p = sub.add_parser('corpus', help='Write a seeded corpus of random weighted complexes')
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--count', type=int, default=10)
    p.add_argument('--out-dir', default='corpus')
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    log_level = logging.DEBUG if args.debug else logging.INFO
    setup_logging(log_level=log_level, log_dir=LOG_DIR, app_name=APP_NAME)

    logger = logging.getLogger(__name__)
    logger.info(f"Starting {args.command}")
    source = getattr(args, 'complex', None) or getattr(args, 'filtration', None) or getattr(args, 'graph', None)

    try:
        ensure_directories_exist()
        result = COMMANDS[args.command](args)
    except ParseError as e:
        logger.error(f"Parse error: {e}")
        get_failure_logger().log_failure(args.command, source, type(e).__name__, str(e), {'line': e.line, 'column': e.column})
        return EXIT_PARSE
    except OSError as e:
        logger.error(f"Cannot read input: {e}")
        get_failure_logger().log_failure(args.command, source, type(e).__name__, str(e))
        return EXIT_PARSE
    except SemanticError as e:
        logger.error(f"Semantic error: {e}")
        get_failure_logger().log_failure(args.command, source, type(e).__name__, str(e), e.context)
        return EXIT_SEMANTIC
    except ValueError as e:
        logger.error(f"Invalid argument: {e}")
        get_failure_logger().log_failure(args.command, source, type(e).__name__, str(e))
        return EXIT_SEMANTIC

    print(result.text)
    write_report(result.report, args.output)
    logger.info(f"{args.command} completed with exit code {result.exit_code}")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
