try:
    from ._hypower import *  # noqa: F401,F403
except ImportError:  # running against a build tree, module not packaged yet
    from _hypower import *  # noqa: F401,F403
