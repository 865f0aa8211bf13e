try:
    from ._kauffman import *  # noqa: F401,F403
    from ._kauffman import __doc__  # noqa: F401
except ImportError:  # in-tree builds put the module next to the package
    from _kauffman import *  # noqa: F401,F403
    from _kauffman import __doc__  # noqa: F401
