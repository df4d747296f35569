# models/p_value.py

class PValue(float):
    """Рандомизированное конформное p-value, строго внутри (0, 1)"""

    __slots__ = ()

    def __new__(cls, value: float) -> "PValue":
        if not 0.0 < value < 1.0:
            raise ValueError(f"p-value must lie in (0, 1), got {value!r}")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"PValue({float(self)!r})"
