from models.exception.framework_base_exception import FrameworkBaseException


class InternalInconsistency(FrameworkBaseException):
    """
    Raised when an identity that must hold exactly (bracket relations, rank identities, curvature bounds) fails.
    Seeing this exception always means a bug.
    """
    def __init__(self, module: str, name: str, cause: str):
        super().__init__(exception_type='internal.inconsistency', module=module, name=name)
        self.cause: str = cause
        self.message = f'{self.message}.{cause}'
