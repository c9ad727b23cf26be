# License: MIT

from qhrand.utils.exceptions import ConfigError

CONFIG_KEYS = ('p', 'qg_table', 'qg_seed', 'h1_depth', 'ntt_order', 'h2_depth', 'iv1', 'iv2', 'iv3', 'pad')


def parse_config_text(text):
    """Flat key=value lines; text after # is a comment and blank lines are skipped."""
    config_dict = dict()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError('Line %d of config is not key=value: %s' % (lineno, line))
        key, value = (s.strip() for s in line.split('=', 1))
        if key not in CONFIG_KEYS:
            raise ConfigError('Unknown config key %s on line %d!' % (key, lineno))
        if key in config_dict:
            raise ConfigError('Config key %s is set twice!' % key)
        config_dict[key] = value
    return config_dict


def load_config_file(path):
    try:
        with open(path, 'r', encoding='utf-8') as fh:
            text = fh.read()
    except UnicodeDecodeError as e:
        raise ConfigError('Config file %s is not UTF-8 text: %s' % (path, e))
    return parse_config_text(text)


def parse_int(key, value):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigError('Config key %s expects an integer but %r received!' % (key, value))


def parse_vector(key, value):
    if value is None:
        return None
    if isinstance(value, str):
        value = [v for v in value.replace(',', ' ').split()]
    return [parse_int(key, v) for v in value]
