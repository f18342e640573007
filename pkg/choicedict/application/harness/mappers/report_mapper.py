import json
from typing import List

from choicedict.application.harness.dtos.report_dtos import (
    BenchReport,
    ConstantTimeCheck,
    DifferentialReport,
    SpaceReport,
)
from choicedict.application.harness.mappers.trace_mapper import TraceMapper


class ReportMapper:
    """Conversão de relatórios para texto alinhado e JSON."""

    @staticmethod
    def differential_to_text(report: DifferentialReport) -> str:
        if report.ok:
            lines = [f"ok: {report.ops_run} operações sem divergência"]
        else:
            d = report.divergence
            lines = [
                f"divergência na operação {d.index + 1} (linha {d.op.line}): {d.op}",
                f"  esperado: {d.expected}",
                f"  obtido:   {d.actual}",
            ]
            lines.extend(f"  invariante: {v}" for v in d.violations)
            if report.minimal_prefix is not None:
                lines.append(f"prefixo mínimo ({len(report.minimal_prefix)} operações):")
                lines.extend(
                    "  " + line for line in TraceMapper.format(report.minimal_prefix).splitlines()
                )
        if report.case_counts:
            cases = " ".join(f"{name}={count}" for name, count in sorted(report.case_counts.items()))
            lines.append(f"casos: {cases}")
        return "\n".join(lines)

    @staticmethod
    def differential_to_json(report: DifferentialReport) -> str:
        payload = {"ok": report.ok, "ops_run": report.ops_run, "case_counts": report.case_counts}
        if report.divergence is not None:
            d = report.divergence
            payload["divergence"] = {
                "index": d.index,
                "line": d.op.line,
                "op": str(d.op),
                "expected": d.expected,
                "actual": d.actual,
                "violations": d.violations,
            }
        if report.minimal_prefix is not None:
            payload["minimal_prefix"] = [str(op) for op in report.minimal_prefix.ops]
        return json.dumps(payload, ensure_ascii=False, sort_keys=True)

    @staticmethod
    def bench_to_text(reports: List[BenchReport], check: ConstantTimeCheck) -> str:
        lines: List[str] = []
        for report in reports:
            status = "ok" if report.footprint_ok else "FALHA"
            lines.append(
                f"n={report.n} b={report.b} mode={report.mode} footprint={report.footprint_bits} "
                f"esperado={report.expected_footprint_bits} [{status}] iter_state={report.iter_state_bits}"
            )
            lines.append(f"  {'operação':<12} {'max':>6} {'média':>8} {'teto':>6} {'ns/op':>10} {'amostras':>9}")
            for stats in report.ops:
                lines.append(
                    f"  {stats.operation:<12} {stats.max_accesses:>6} {stats.mean_accesses:>8.2f} "
                    f"{stats.ceiling:>6} {stats.mean_ns:>10.0f} {stats.samples:>9}"
                )
        verdict = "ok" if check.ok else "FALHA"
        lines.append(
            f"tempo constante: {verdict} (dentro dos tetos={check.within_ceilings}, "
            f"init idêntico={check.init_counts_equal}, roteiro fixo idêntico={check.fixed_schedule_equal})"
        )
        return "\n".join(lines)

    @staticmethod
    def bench_to_json(reports: List[BenchReport], check: ConstantTimeCheck) -> str:
        payload = {
            "reports": [report.model_dump() for report in reports],
            "constant_time": {**check.model_dump(), "ok": check.ok},
        }
        return json.dumps(payload, ensure_ascii=False, sort_keys=True)

    @staticmethod
    def space_to_text(report: SpaceReport) -> str:
        return " ".join(f"{name}={bits}" for name, bits in report.spans)

    @staticmethod
    def space_to_json(report: SpaceReport) -> str:
        return report.model_dump_json()
