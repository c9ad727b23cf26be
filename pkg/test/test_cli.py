import numpy as np

from qhrand.cli import run
from qhrand.pipeline.config import PipelineConfig
from qhrand.pipeline.pipeline import pipeline_encrypt
from qhrand.sources.generators import gen_lcg
from qhrand.utils.io_utils import read_cipher, read_symbols


def _report(text):
    return dict(line.split('=', 1) for line in text.splitlines())


def test_gen_encrypt_analyze(tmp_path, capsys):
    plain = str(tmp_path / 'plain.txt')
    cipher = str(tmp_path / 'cipher.qhn')
    ck = str(tmp_path / 'ck.dat')
    assert run(['gen', '--kind', 'lcg', '--seed', '1', '-n', '684', '-p', '7', '-o', plain]) == 0
    assert read_symbols(plain).tolist() == gen_lcg(1, 684, 7).tolist()

    assert run(['encrypt', '-i', plain, '-o', cipher]) == 0
    header, symbols = read_cipher(cipher)
    assert (header.p, header.n1, header.n2, header.n3, header.length) == (7, 4, 6, 2, 684)
    assert symbols.tolist() == pipeline_encrypt(PipelineConfig(), gen_lcg(1, 684, 7)).tolist()

    capsys.readouterr()
    assert run(['analyze', '-i', cipher, '-M', '18', '--ck-out', ck]) == 0
    report = _report(capsys.readouterr().out)
    assert report['n_blocks'] == '114'
    assert report['period'] == '2052'
    assert report['verdict'] == ('random' if float(report['p_value']) >= 0.01 else 'non-random')
    with open(ck) as fh:
        lines = fh.read().splitlines()
    assert len(lines) == 2052
    assert lines[0] == '0 1.000000'


def test_decrypt_round_trip(tmp_path):
    config = tmp_path / 'pipeline.cfg'
    config.write_text('p=7\nqg_table=paper7-latin\nqg_seed=5\nh1_depth=3\nh2_depth=2\niv2=1,2,3,4,5,6\n')
    plain = str(tmp_path / 'plain.txt')
    cipher = str(tmp_path / 'cipher.qhn')
    back = str(tmp_path / 'back.txt')
    assert run(['gen', '--kind', 'triangle', '-n', '100', '-o', plain]) == 0
    # 100 is not a multiple of lcm(8, 6, 4) = 24
    assert run(['encrypt', '-c', str(config), '-i', plain, '-o', cipher]) == 1
    assert run(['encrypt', '-c', str(config), '--pad', '-i', plain, '-o', cipher]) == 0
    assert read_cipher(cipher)[0].length == 100
    assert read_cipher(cipher)[1].shape == (120,)
    assert run(['decrypt', '-c', str(config), '-i', cipher, '-o', back, '--kernel', 'naive']) == 0
    assert read_symbols(back).tolist() == read_symbols(plain).tolist()
    # decrypting with the default orders contradicts the header
    assert run(['decrypt', '-i', cipher, '-o', back]) == 1


def test_misaligned_length_exit_code(tmp_path, capsys):
    plain = str(tmp_path / 'plain.txt')
    assert run(['gen', '-n', '685', '-o', plain]) == 0
    capsys.readouterr()
    assert run(['encrypt', '-i', plain, '-o', str(tmp_path / 'c.qhn')]) == 1
    err = capsys.readouterr().err
    assert 'LengthNotAligned' in err
    assert '12' in err


def test_roundtrip_verb(capsys):
    assert run(['roundtrip', '--kind', 'lcg', '-n', '684', '--count', '3']) == 0
    assert capsys.readouterr().out == 'match\n'
    assert run(['roundtrip', '--kind', 'dseq', '--prime', '2029', '-n', '120']) == 0
    assert capsys.readouterr().out == 'match\n'


def test_analyze_compare(tmp_path, capsys):
    plain = str(tmp_path / 'ones.txt')
    cipher = str(tmp_path / 'ones.qhn')
    assert run(['gen', '--kind', 'ones', '-n', '120', '-o', plain]) == 0
    assert run(['encrypt', '-i', plain, '-o', cipher]) == 0
    capsys.readouterr()
    assert run(['analyze', '-i', cipher, '--compare', plain]) == 0
    out = capsys.readouterr().out
    assert 'Input' in out and 'Output' in out and 'verdict' in out


def test_bench_verb(capsys):
    assert run(['bench', '--transform', 'hadamard', '--sizes', '4,8', '--repeats', '2']) == 0
    out = capsys.readouterr().out
    assert 'Naive' in out and 'Fast' in out


def test_deterministic_outputs(tmp_path):
    plain = str(tmp_path / 'plain.txt')
    assert run(['gen', '--kind', 'lcg', '--seed', '9', '-n', '240', '-o', plain]) == 0
    outputs = list()
    for k in range(2):
        cipher = tmp_path / ('c%d.qhn' % k)
        assert run(['encrypt', '-i', plain, '-o', str(cipher)]) == 0
        outputs.append(cipher.read_bytes())
    assert outputs[0] == outputs[1]


def test_exit_codes(tmp_path, capsys):
    assert run([]) == 1
    assert run(['shuffle']) == 1
    assert run(['gen', '--unknown-flag']) == 1
    assert run(['gen', '-n', 'many']) == 1
    assert run(['gen', '--seed', '0', '-o', str(tmp_path / 'x.txt')]) == 1
    assert run(['analyze', '-i', str(tmp_path / 'missing.txt')]) == 2
    assert run(['encrypt', '-c', str(tmp_path / 'missing.cfg'), '-i', str(tmp_path / 'missing.txt')]) == 2
    bad_config = tmp_path / 'bad.cfg'
    bad_config.write_text('p=7\ncolour=red\n')
    assert run(['roundtrip', '-c', str(bad_config)]) == 1
    garbage = tmp_path / 'garbage.txt'
    garbage.write_text('1 2 three\n')
    assert run(['analyze', '-i', str(garbage)]) == 2
    assert run(['decrypt', '-i', str(garbage)]) == 2
    assert run(['--version']) == 0
    assert 'qhrand' in capsys.readouterr().out


def test_log_file(tmp_path):
    log_file = tmp_path / 'qhrand.log'
    plain = str(tmp_path / 'd.txt')
    assert run(['--log-file', str(log_file), '--log-level', 'ERROR', 'gen', '--kind', 'dseq', '-n', '60',
                '-o', plain]) == 0
    assert log_file.exists()
    assert np.all(read_symbols(plain) < 7)


def test_malformed_inputs_exit_cleanly(tmp_path, capsys):
    bad_files = {
        'superscript.txt': '1 2 ²\n'.encode('utf-8'),
        'wide.txt': ('1 ' + '9' * 30 + '\n').encode('ascii'),
        'latin1.txt': b'1 2 \xff 3\n',
    }
    for name, content in bad_files.items():
        path = tmp_path / name
        path.write_bytes(content)
        assert run(['analyze', '-i', str(path)]) == 2
        assert run(['encrypt', '-i', str(path)]) == 2
        assert 'FormatError' in capsys.readouterr().err

    config = tmp_path / 'pipeline.cfg'
    for text in ('h1_depth=80\n', 'ntt_order=1073741824\n'):
        config.write_text(text)
        assert run(['roundtrip', '-c', str(config)]) == 1
        assert 'ConfigError' in capsys.readouterr().err
    config.write_text('iv1=' + '9' * 30 + ',0,0,0\n')
    assert run(['roundtrip', '-c', str(config), '-n', '24']) == 0
    assert capsys.readouterr().out == 'match\n'
    config.write_bytes(b'p=7\n\xff\n')
    assert run(['roundtrip', '-c', str(config)]) == 1
