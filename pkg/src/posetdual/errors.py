"""Exception types shared across the package."""


class PosetError(ValueError):
    """Invalid poset input (bad index, empty poset, malformed JSON)."""


class CycleError(PosetError):
    """The cover relation contains a directed cycle."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"cover relation has a cycle: {' -> '.join(map(str, self.cycle))}")


class CapExceeded(RuntimeError):
    """An enumeration or dualization exceeded its configured size bound."""

    def __init__(self, what, bound, count=None):
        self.what = what
        self.bound = bound
        self.count = count
        msg = f"{what} exceeds cap {bound}"
        if count is not None:
            msg += f" (reached {count} before stopping)"
        super().__init__(msg)
