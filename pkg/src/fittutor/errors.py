"""Exception types raised by the fittutor library."""


class FitTutorError(Exception):
    """Base class for all fittutor errors."""


class DocumentError(FitTutorError):
    """A document failed to parse or violates the canonical schema."""


class MalformedDocument(DocumentError):
    """Input is not syntactically valid UTF-8 JSON of the expected shape."""


class MissingPart(DocumentError):
    """A frame document does not cover all 17 body parts."""


class DuplicatePart(DocumentError):
    """A frame document lists the same body part more than once."""


class OutOfRangeScore(DocumentError):
    """A keypoint confidence score falls outside [0, 1]."""


class UnknownPartName(DocumentError):
    """An external keypoint export uses a part name we do not recognize."""


class DegeneratePair(FitTutorError):
    """Slope requested for two coincident points (zero-length limb)."""


class PairSetMismatch(FitTutorError):
    """Two slope profiles were built over different joint-pair sets."""
