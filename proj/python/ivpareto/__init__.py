"""Pareto sets over point, interval and relation structures, with
refinement sessions that contract intervals as new information arrives.

Problems, events and results use the same JSON schemas as the command-line
tool and the HTTP service. Functions here accept a dict or a JSON string and
return dicts.
"""

import json

from . import _core
from ._core import Error, contract, interval_dominates

__all__ = [
    "Error",
    "Session",
    "contract",
    "error_code",
    "generate",
    "incomparability",
    "interval_dominates",
    "normalize_problem",
    "solve",
    "to_intervals",
    "verify",
]


def _text(value):
    return value if isinstance(value, str) else json.dumps(value)


def error_code(err):
    """The engine code of an Error, e.g. "NotAContraction"."""
    return err.args[0]


def normalize_problem(problem):
    """Validate a problem and return it with relations closed."""
    return json.loads(_core.normalize_problem(_text(problem)))


def solve(problem, mode=None):
    """Pareto set, dominations and witnesses. mode overrides an interval
    problem's "strict"/"weak" setting."""
    return json.loads(_core.solve(_text(problem), mode))


def to_intervals(problem):
    """Replace each relation with its [lower, upper] utility brackets."""
    return json.loads(_core.to_intervals(_text(problem)))


def incomparability(problem):
    """Per alternative: incomparable alternatives per criterion, and how many
    criteria each one is incomparable on."""
    return json.loads(_core.incomparability(_text(problem)))


def generate(alternatives, criteria, variant, seed=0):
    """Random problem and the complete-information problem behind it."""
    problem, truth = _core.generate(alternatives, criteria, variant, seed)
    return json.loads(problem), json.loads(truth)


def verify(suite, instances=1000, seed=1):
    return json.loads(_core.verify(suite, instances, seed))


class Session:
    """Event-sourced refinement dialogue over an interval or relation problem."""

    def __init__(self, core):
        self._core = core

    @classmethod
    def create(cls, problem, baseline=None, id="session"):
        return cls(_core.Session.create(_text(problem), baseline, id))

    @classmethod
    def from_json(cls, document):
        return cls(_core.Session.from_json(_text(document)))

    @classmethod
    def load(cls, path):
        return cls(_core.Session.load(str(path)))

    @property
    def id(self):
        return self._core.id

    @property
    def next_sequence(self):
        return self._core.next_sequence

    def apply(self, event):
        """Apply one event; a missing "sequence" takes the next free number."""
        if not isinstance(event, str) and "sequence" not in event:
            event = dict(event, sequence=self.next_sequence)
        return json.loads(self._core.apply(_text(event)))

    def tighten(self, alternative, criterion, lower, upper):
        return self.apply(
            {"kind": "tighten", "alternative": alternative, "criterion": criterion, "interval": [lower, upper]}
        )

    def compare(self, criterion, preferred, other):
        return self.apply({"kind": "compare", "criterion": criterion, "preferred": preferred, "other": other})

    def undo(self):
        self._core.undo()

    def pareto(self):
        return json.loads(self._core.pareto())

    def suggestions(self, limit=5):
        return json.loads(self._core.suggestions(limit))

    def history(self):
        return json.loads(self._core.history())

    def working(self):
        return json.loads(self._core.working())

    def to_json(self):
        return json.loads(self._core.to_json())

    def save(self, path):
        self._core.save(str(path))
