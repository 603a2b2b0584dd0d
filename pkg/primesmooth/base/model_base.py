import param


class Model(param.Parameterized):
    """Base class for every record and query in the package"""
    def __init__(self, **params):
        super().__init__(**params)
