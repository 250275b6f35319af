import ast
import copy

from .exceptions import ConfigError


def isfloat(val):
    """
    check if the entry can become a float (float or string of float)

    Parameters
    ----------
    val
        an entry of any type

    Returns
    -------
    bool
        True if the input can become a float, False otherwise

    """
    try:
        float(val)
        return True
    except (TypeError, ValueError):
        return False


def isint(val):
    """
    check if the entry can become an integer (integer or string of integer)

    Parameters
    ----------
    val
        an entry of any type

    Returns
    -------
    bool
        True if the input can become an integer, False otherwise

    """
    try:
        int(val)
        return True
    except (TypeError, ValueError):
        return False


def value(entry):
    """
    convert a command line string to the python literal it spells

    Parameters
    ----------
    entry: str
        an entry of type str, e.g. '6', '1e-5', '[0.2, 0.1]', 'true'

    Returns
    -------
    int, float, bool, list, dict or str
        the literal value, or the entry itself when it is not a literal

    Notes
    -----
    json spellings of the booleans and null ('true', 'false', 'null') are accepted too.

    """
    lowered = entry.strip().lower()
    if lowered in ('true', 'false'):
        return lowered == 'true'
    if lowered in ('null', 'none'):
        return None
    try:
        return ast.literal_eval(entry)
    except (ValueError, SyntaxError):
        return entry


def update_default_kwargs(default_kw, kw, method_name=None, method_doc_path=None):
    """
    This function receives a super-dictionary (e.g., default kwargs) and update the values with a sub-dictionary (e.g., kwargs).

    Parameters
    ----------
    default_kw: dict
        The default dictionary

    kw: dict
        The (partially) updated dictionary values. The keys must be in the default_kw.

    method_name: str, optional (default=None)
        name of the caller, used in the error message

    method_doc_path: str, optional (default=None)
        where to find the documentation of the legit arguments

    Raises
    ------
    ConfigError
        If the keys in the default_kw is not a superset of the keys inside the kw.

    Returns
    -------
    dict
        The full default dictionary with all the keys, but potentially updated values based on the second dictionary.
        Nested dictionaries are updated recursively.

    """
    temp = copy.deepcopy(default_kw)
    for k in kw:
        if k not in temp:
            if method_name:
                msg = "The argument '%s' is not a valid parameter for the method '%s'.\n" \
                      "You can check the documentation page for a complete list of legit arguments: %s" %(k, method_name, str(method_doc_path))
            else:
                msg = "The argument '%s' is not a valid parameter for the method.\n" \
                      "You can check the documentation page for a complete list of legit arguments." %(k)
            raise ConfigError(msg)
        elif isinstance(temp[k], dict) and isinstance(kw[k], dict) and len(temp[k]) > 0:
            temp[k] = update_default_kwargs(temp[k], kw[k], method_name, method_doc_path)
        else:
            temp[k] = copy.deepcopy(kw[k])
    return temp


def set_dotted(config, assignment):
    """
    apply one 'dotted.key=value' override to a nested dictionary

    Parameters
    ----------
    config: dict
        the nested dictionary, modified in place

    assignment: str
        the override, e.g. 'params.n=6' or 'tolerances.residual=1e-5'

    Returns
    -------
    dict
        the same dictionary

    """
    if '=' not in assignment:
        msg = "The override '%s' must have the form key=value." % assignment
        raise ConfigError(msg)
    key, raw = assignment.split('=', 1)
    path = [k for k in key.strip().split('.') if k]
    if len(path) == 0:
        msg = "The override '%s' has an empty key." % assignment
        raise ConfigError(msg)
    node = config
    for k in path[:-1]:
        if k not in node or not isinstance(node[k], dict):
            msg = "The key '%s' in the override '%s' is not a section of the config." % (k, assignment)
            raise ConfigError(msg)
        node = node[k]
    node[path[-1]] = value(raw)
    return config
