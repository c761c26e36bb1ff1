from models.exception.invalid_parameter_value import InvalidParameterValue


class UsageError(InvalidParameterValue):
    """
    Malformed command line. ``detail`` keeps the parser's own explanation for the user.
    """
    def __init__(self, module: str, detail: str):
        super().__init__(module=module, name='argv', parameter='usage', cause='malformed_arguments')
        self.detail: str = detail
