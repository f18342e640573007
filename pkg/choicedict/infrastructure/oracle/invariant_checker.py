from typing import List, Optional, Sequence

from choicedict.core.errors import InvariantViolation
from choicedict.domain.dictionary.entities.seg_dict import SegDict


def check_seg_dict(sd: SegDict, expected: Optional[Sequence[int]] = None) -> List[str]:
    """Verifica o invariante de armazenamento de um SegDict sem contar acessos.

    Com ``expected`` (os valores a_1..a_N do oráculo) verifica também o
    conteúdo lógico e k = número de zeros.
    """
    violations: List[str] = []
    n_cells = sd.n_cells
    with sd.store.uncounted():
        k = sd.barrier()
        flag, stored_k = sd.barrier_fields()
        if not 0 <= k <= n_cells:
            violations.append(f"barreira k={k} fora de [0, {n_cells}]")
            return violations
        if flag == 1 and not 1 <= stored_k <= n_cells:
            violations.append(f"flag=1 mas o k escondido em A[1] vale {stored_k}")

        for i in range(1, n_cells + 1):
            j = sd.mate(i)
            if j == i:
                continue
            if sd.mate(j) != i:
                violations.append(f"mate não é involução: mate({i})={j}, mate({j})={sd.mate(j)}")
            if (i <= k) == (j <= k):
                violations.append(f"aresta {i}–{j} não atravessa a barreira k={k}")
            if sd.mate_field(i) != j or sd.mate_field(j) != i:
                violations.append(f"aresta {i}–{j} sem ponteiros recíprocos")

        nonzero = sd.nonzero()
        if k == n_cells and nonzero != 0:
            violations.append(f"nonzero()={nonzero} com k=N")
        if k < n_cells and (not 1 <= nonzero <= n_cells or sd.read(nonzero) == 0):
            violations.append(f"nonzero()={nonzero} não aponta um a_i não nulo")

        if expected is not None:
            if len(expected) != n_cells:
                violations.append(f"oráculo com {len(expected)} valores para N={n_cells}")
                return violations
            zeros = sum(1 for value in expected if value == 0)
            if k != zeros:
                violations.append(f"k={k} difere do número de zeros {zeros}")
            for i in range(1, n_cells + 1):
                value = sd.read(i)
                if value != expected[i - 1]:
                    violations.append(f"a_{i}={value}, esperado {expected[i - 1]}")
    return violations


def assert_seg_dict(sd: SegDict, expected: Optional[Sequence[int]] = None) -> None:
    violations = check_seg_dict(sd, expected)
    if violations:
        raise InvariantViolation(violations)
