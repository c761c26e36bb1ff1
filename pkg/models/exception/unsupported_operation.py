from models.exception.framework_base_exception import FrameworkBaseException


class UnsupportedOperation(FrameworkBaseException):
    """
    Exception for operations that are well defined mathematically but not available here, e.g. matrix models
    of exceptional algebras or raw curvature outside ``sl_n``.
    """
    def __init__(self, module: str, name: str, cause: str):
        super().__init__(exception_type='unsupported.operation', module=module, name=name)
        self.cause: str = cause
        self.message = f'{self.message}.{cause}'
