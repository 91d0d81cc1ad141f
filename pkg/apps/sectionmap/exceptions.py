class SectionMapError(Exception):
    """Base class for hyperplane section analysis errors."""


class SingularHypersurfaceError(SectionMapError):
    """The hypersurface itself is singular."""


class SmoothnessUndecidedError(SectionMapError):
    """A smoothness sweep ran out of degrees without a decision."""


class SingularSectionError(SectionMapError):
    """The hyperplane is tangent: its section is singular."""


class UnsupportedShapeError(SectionMapError):
    pass
