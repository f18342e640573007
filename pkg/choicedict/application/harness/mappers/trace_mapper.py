from typing import List, Optional

from choicedict.application.harness.dtos.trace_dtos import Op, OpKind, OpTrace
from choicedict.core.errors import TraceParseError


class TraceMapper:
    """Conversão entre o formato texto de traces e OpTrace.

    Formato: cabeçalho opcional "universe=10 seed=7" (ou "universe=4x8" para
    N×b em traces de sequência) e uma operação por linha, "op arg1 [arg2]".
    Linhas vazias e comentários (#) são ignorados.
    """

    @staticmethod
    def _parse_header(line_no: int, line: str, trace: OpTrace) -> None:
        for token in line.split():
            key, sep, value = token.partition("=")
            if not sep:
                raise TraceParseError(line_no, f"esperado chave=valor no cabeçalho: '{token}'")
            try:
                if key == "universe":
                    if "x" in value:
                        cells, half = value.split("x", 1)
                        trace.n_cells, trace.b = int(cells), int(half)
                        if trace.n_cells < 1 or trace.b < 1:
                            raise ValueError(value)
                    else:
                        trace.universe = int(value)
                        if trace.universe < 1:
                            raise ValueError(value)
                elif key == "seed":
                    trace.seed = int(value)
                else:
                    raise TraceParseError(line_no, f"chave desconhecida no cabeçalho: '{key}'")
            except ValueError:
                raise TraceParseError(line_no, f"valor inválido para {key}: '{value}'")

    @staticmethod
    def _parse_op(line_no: int, line: str, trace: OpTrace, has_header: bool) -> Op:
        tokens = line.split()
        try:
            kind = OpKind(tokens[0].lower())
        except ValueError:
            raise TraceParseError(line_no, f"operação desconhecida: '{tokens[0]}'")
        if len(tokens) - 1 != kind.arity:
            raise TraceParseError(
                line_no, f"{kind.value} espera {kind.arity} argumento(s), recebeu {len(tokens) - 1}"
            )
        try:
            args = tuple(int(t, 0) for t in tokens[1:])
        except ValueError:
            raise TraceParseError(line_no, f"argumento não inteiro em '{line}'")
        if has_header and kind.on_sequence != trace.is_sequence:
            universe = "sequência" if trace.is_sequence else "conjunto"
            raise TraceParseError(line_no, f"{kind.value} não se aplica a um universo de {universe}")
        if trace.is_sequence:
            limit = trace.n_cells
        else:
            limit = trace.universe
        if limit is not None and args and not 1 <= args[0] <= limit:
            raise TraceParseError(line_no, f"argumento {args[0]} fora de [1, {limit}]")
        if kind is OpKind.WRITE and (args[1] < 0 or (trace.b and args[1] >> (2 * trace.b))):
            raise TraceParseError(line_no, f"valor {args[1]} não cabe na célula")
        return Op(kind, args, line_no)

    @staticmethod
    def parse(text: str) -> OpTrace:
        trace = OpTrace()
        has_header = False
        seen_op = False
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" in line.split()[0]:
                if has_header or seen_op:
                    raise TraceParseError(line_no, "cabeçalho deve ser a primeira linha útil")
                TraceMapper._parse_header(line_no, line, trace)
                has_header = True
                continue
            op = TraceMapper._parse_op(line_no, line, trace, has_header)
            if not has_header and seen_op and op.kind.on_sequence != trace.ops[0].kind.on_sequence:
                raise TraceParseError(line_no, "trace mistura operações de conjunto e de sequência")
            trace.ops.append(op)
            seen_op = True
        return trace

    @staticmethod
    def format(trace: OpTrace) -> str:
        lines: List[str] = []
        header: List[str] = []
        if trace.is_sequence:
            header.append(f"universe={trace.n_cells}x{trace.b}")
        elif trace.universe is not None:
            header.append(f"universe={trace.universe}")
        if trace.seed is not None:
            header.append(f"seed={trace.seed}")
        if header:
            lines.append(" ".join(header))
        lines.extend(str(op) for op in trace.ops)
        return "\n".join(lines) + "\n"

    @staticmethod
    def with_universe(trace: OpTrace, universe: Optional[int]) -> OpTrace:
        """Copia a trace trocando o universo de conjunto (valor de --n)."""
        if universe is None or trace.is_sequence:
            return trace
        if trace.ops and trace.ops[0].kind.on_sequence:
            return trace
        for op in trace.ops:
            if op.args and not 1 <= op.args[0] <= universe:
                raise TraceParseError(op.line, f"argumento {op.args[0]} fora de [1, {universe}]")
        return OpTrace(ops=list(trace.ops), seed=trace.seed, universe=universe)
