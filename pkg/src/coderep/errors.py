"""Exception hierarchy shared by every stage of the pipeline."""


class CodeRepError(Exception):
    """Base class for all errors raised by coderep."""


class ParseError(CodeRepError):
    def __init__(self, message, line=0, column=0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class IngestError(CodeRepError):
    """Malformed ESTree JSON."""


class PrintError(CodeRepError):
    """A node has no lexical form (opaque ingested node)."""


class DegenerateMutation(CodeRepError):
    """The requested mutation would not produce a distinct, valid buggy statement."""


class NotApplicable(CodeRepError, ValueError):
    def __init__(self, rep, bug_type):
        self.rep = rep
        self.bug_type = bug_type
        super().__init__(f"representation {rep} does not apply to bug type {bug_type}")


class MissingContext(CodeRepError, ValueError):
    """A typed representation was requested without type information."""


class NotPatchable(CodeRepError):
    def __init__(self, rep):
        self.rep = rep
        super().__init__(f"representation {rep} is lossy and cannot be decoded to source")


class MissingMap(CodeRepError):
    """Decoding needs an abstraction map / literal store that was not supplied."""


class MalformedEncoding(CodeRepError):
    """Token stream does not follow the grammar of its representation."""


class SplitError(CodeRepError, ValueError):
    pass


class AlignmentError(CodeRepError):
    """Expected outputs and predictions (or src/tgt lines) are not aligned."""


class EmptyReference(CodeRepError, ValueError):
    pass


class ConfigError(CodeRepError, ValueError):
    pass


class StageError(CodeRepError):
    """Wraps an error with the pipeline stage that raised it."""

    def __init__(self, stage, cause):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage '{stage}' failed: {cause}")
