from enum import Enum


class WriteCase(Enum):
    """Forma de uma chamada write(i, x) antes de sua execução.

    LEFT/RIGHT: lado da barreira em que i está antes da chamada.
    CASE_1: i = i′ = k̃ = k′.  CASE_2: i = k′ ≠ k̃ = i′.
    """
    NOOP = "noop"
    UPDATE = "update"
    INSERT_LEFT = "insert_left"
    INSERT_RIGHT = "insert_right"
    INSERT_CASE_1 = "insert_case_1"
    INSERT_CASE_2 = "insert_case_2"
    DELETE_LEFT = "delete_left"
    DELETE_RIGHT = "delete_right"
    DELETE_CASE_1 = "delete_case_1"
    DELETE_CASE_2 = "delete_case_2"

    @classmethod
    def barrier_cases(cls) -> frozenset["WriteCase"]:
        """Os casos que movem a barreira (inserções e remoções)."""
        return frozenset(c for c in cls if c not in (cls.NOOP, cls.UPDATE))

    @classmethod
    def classify(cls, insertion: bool, i: int, i_mate: int, k_tilde: int, k_mate: int, k: int) -> "WriteCase":
        if i == i_mate == k_tilde == k_mate:
            return cls.INSERT_CASE_1 if insertion else cls.DELETE_CASE_1
        if i == k_mate and i_mate == k_tilde:
            return cls.INSERT_CASE_2 if insertion else cls.DELETE_CASE_2
        if insertion:
            return cls.INSERT_LEFT if i <= k else cls.INSERT_RIGHT
        return cls.DELETE_LEFT if i <= k else cls.DELETE_RIGHT
