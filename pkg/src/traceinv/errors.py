"""Package-wide exception types."""


class UnsupportedSizeError(Exception):
    """Raised when an input is valid but exceeds the supported size envelope.

    Distinct from ValueError so callers (and the CLI exit-code mapping) can
    tell "you asked for something too big" apart from "the arguments are
    malformed".
    """
