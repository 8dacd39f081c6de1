#!/usr/bin/env python3
"""
Toric NCCR - Komut Satırı Arayüzü
"""

import argparse
import json
import os
import sys
from typing import List, Optional, Tuple

import yaml
from dotenv import load_dotenv
from loguru import logger
from pydantic import ValidationError

from src.cones.cone_model import ConeSpec, load_cone
from src.exceptions import ToricError, VerificationMismatch, WitnessCheckFailed
from src.pipeline.toric_analyzer import Report, ToricAnalyzer, parse_beta_list, report_table

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_INTERNAL = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


class CliParser(argparse.ArgumentParser):
    """Kullanım hatalarında argparse'ın 2 yerine 1 ile çıkması için"""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# ------------------ LOGGING ------------------ #
def setup_logging(config_path: str):
    """stderr sink'i ve isteğe bağlı dönen dosya sink'i"""
    settings = {"level": "INFO", "file": None, "rotation": "1 MB"}
    try:
        with open(config_path, "r", encoding="utf-8") as file:
            settings.update((yaml.safe_load(file) or {}).get("logging", {}))
    except Exception as e:
        print(f"⚠️ Logging ayarları okunamadı: {e}", file=sys.stderr)

    logger.remove()
    logger.add(sys.stderr, level=settings["level"])
    if settings.get("file"):
        logger.add(settings["file"], level=settings["level"], rotation=settings["rotation"])


# ------------------ GİRDİ ------------------ #
def _inputs(args) -> Tuple[Optional[ConeSpec], Optional[List[int]]]:
    spec = load_cone(args.cone) if getattr(args, "cone", None) else None
    betas = parse_beta_list(args.betas) if getattr(args, "betas", None) else None
    return spec, betas


def _require_cone(args) -> ConeSpec:
    spec, _ = _inputs(args)
    if spec is None:
        raise UsageError(f"'{args.cmd}' için --cone gerekli")
    return spec


def _require_input(args) -> Tuple[Optional[ConeSpec], Optional[List[int]]]:
    spec, betas = _inputs(args)
    if (spec is None) == (betas is None):
        raise UsageError(f"'{args.cmd}' için --cone ya da --betas seçeneklerinden tam olarak biri gerekli")
    return spec, betas


def _point(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"Geçersiz nokta: {text!r}")


# ------------------ KOMUTLAR ------------------ #
def cmd_validate(analyzer: ToricAnalyzer, args) -> Report:
    return analyzer.validate(_require_cone(args))


def cmd_analyze(analyzer: ToricAnalyzer, args) -> Report:
    return analyzer.analyze(_require_cone(args))


def cmd_complex(analyzer: ToricAnalyzer, args) -> Report:
    spec, betas = _require_input(args)
    return analyzer.complex(_point(args.point), spec=spec, betas=betas)


def cmd_complexes(analyzer: ToricAnalyzer, args) -> Report:
    spec, betas = _require_input(args)
    return analyzer.complexes(spec=spec, betas=betas)


def cmd_search(analyzer: ToricAnalyzer, args) -> Report:
    spec, betas = _require_input(args)
    pruning = "gorenstein_almost_simplicial" if args.prune else None
    return analyzer.search(spec=spec, betas=betas, mode=args.mode, pruning=pruning, max_subsets=args.cap)


def cmd_classify_1d(analyzer: ToricAnalyzer, args) -> Report:
    if not args.betas:
        raise UsageError("'classify-1d' için --betas gerekli")
    return analyzer.classify_1d(parse_beta_list(args.betas))


def cmd_oracle(analyzer: ToricAnalyzer, args) -> Report:
    return analyzer.run_oracle(_require_cone(args), denominator=args.grid_denominator, box=args.box)


def cmd_verify(analyzer: ToricAnalyzer, args) -> Report:
    return analyzer.verify(args.example)


def build_parser() -> CliParser:
    common = CliParser(add_help=False)
    common.add_argument("--cone", help="JSON koni dosyası")
    common.add_argument("--betas", help="β-modu girdisi, ör. 2,1,-1,-1,-1")
    common.add_argument("--tsv", action="store_true", help="JSON yerine sekmeyle ayrılmış tablo")
    common.add_argument("--output", help="Raporu dosyaya yaz")
    common.add_argument("--no-timing", action="store_true", help="Rapordan süre bilgisini çıkar")
    common.add_argument("--config", help="Config yolu (varsayılan: TORIC_NCCR_CONFIG ya da config/config.yaml)")

    parser = CliParser(prog="toric-nccr", description="Torik konilerde konik modüller ve NCCR araması")
    sub = parser.add_subparsers(dest="cmd", required=True)

    sub.add_parser("validate", parents=[common]).set_defaults(func=cmd_validate)
    sub.add_parser("analyze", parents=[common]).set_defaults(func=cmd_analyze)

    c = sub.add_parser("complex", parents=[common])
    c.add_argument("--point", required=True, help="Kafes noktası, ör. 1,0")
    c.set_defaults(func=cmd_complex)

    cs = sub.add_parser("complexes", parents=[common])
    cs.add_argument("--all", action="store_true", help="Tüm noktalar (varsayılan)")
    cs.set_defaults(func=cmd_complexes)

    s = sub.add_parser("search", parents=[common])
    s.add_argument("--mode", choices=["exhaustive", "first_found", "all_minimal"])
    s.add_argument("--prune", action="store_true", help="Gorenstein hemen-hemen simpleks budaması")
    s.add_argument("--cap", type=int, help="İncelenecek en fazla alt küme")
    s.set_defaults(func=cmd_search)

    sub.add_parser("classify-1d", parents=[common]).set_defaults(func=cmd_classify_1d)

    o = sub.add_parser("oracle", parents=[common])
    o.add_argument("--grid-denominator", type=int)
    o.add_argument("--box", type=int)
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", parents=[common])
    v.add_argument("--example", required=True, help="Örnek adı ya da 'all'")
    v.set_defaults(func=cmd_verify)
    return parser


def emit(report: Report, args, indent: int = 2):
    if args.tsv:
        text = report_table(report).to_csv(sep="\t", index=False)
    else:
        text = report.to_json(indent=indent) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as file:
            file.write(text)
        logger.info(f"💾 Rapor yazıldı: {args.output}")
    else:
        sys.stdout.write(text)


# ------------------ MAIN ------------------ #
def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    load_dotenv()
    config_path = args.config or os.getenv("TORIC_NCCR_CONFIG", "config/config.yaml")
    setup_logging(config_path)
    try:
        analyzer = ToricAnalyzer(config_path)
        if args.no_timing:
            analyzer.timing = False
        report = args.func(analyzer, args)
        emit(report, args, indent=int(analyzer.config["output"].get("indent", 2)))
    except UsageError as e:
        logger.error(f"❌ {e}")
        return EXIT_INVALID_INPUT
    except ValidationError as e:
        logger.error(f"❌ Geçersiz girdi şeması:\n{e}")
        return EXIT_INVALID_INPUT
    except WitnessCheckFailed as e:
        logger.error(f"💥 {type(e).__name__} [{e.invariant}]: {e}")
        return EXIT_INTERNAL
    except ToricError as e:
        logger.error(f"❌ {type(e).__name__} [{e.invariant}]: {e}")
        return EXIT_INVALID_INPUT
    except (json.JSONDecodeError, OSError) as e:
        logger.error(f"❌ Girdi okunamadı: {e}")
        return EXIT_INVALID_INPUT
    except Exception as e:
        logger.exception(f"💥 Beklenmeyen hata: {e}")
        return EXIT_INTERNAL

    if report.verification is not None and not report.verification["passed"]:
        failed = [c["check"] for c in report.verification["checks"] if not c["passed"]]
        logger.error(f"❌ {VerificationMismatch(args.example, failed)}")
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
