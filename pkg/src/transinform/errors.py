"""Exception types shared across the package."""


class TransinformError(Exception):
    """Base class for all errors raised by this package."""


class ZeroContent(TransinformError):
    """A document has no content tokens left after stopword filtering."""


class EmptyDocument(TransinformError):
    """Segmentation produced no sentences (no tokens survived)."""


class BoundaryOutOfRange(TransinformError):
    """A boundary position does not fit the token sequence it describes."""


class MismatchedTokenCount(TransinformError):
    """Two boundary sets describe token sequences of different lengths."""


class EmptySource(TransinformError):
    """A divergence was requested against an empty n-gram distribution."""


class EmptyReference(TransinformError):
    """Word alignment was requested against an empty reference."""


class InvalidSpec(TransinformError):
    """A noise specification is inconsistent or incomplete."""


class NonPositiveReference(TransinformError):
    """Information loss is undefined for a non-positive reference score."""


class EmptyList(TransinformError):
    """An aggregate was requested over zero values."""


class ManifestError(TransinformError):
    """A corpus manifest is malformed or references unreadable files."""
