import json
import logging

import click

from . import audit
from . import utils
from . import weingarten
from .exceptions import GeometryError
from .export import curvature_rows, write_curvature_csv, write_obj
from .grid import MIN_NODES, GridEngine
from .profile import FamilyParams
from .scene import SceneSpec, build_scene

EXIT_POSITIVE = 0
EXIT_ERROR = 1
EXIT_NOT_WEINGARTEN = 2
EXIT_INDETERMINATE = 3


class MerisurfGroup(click.Group):
    """Reports click usage errors with exit code 1; 2 means NotWeingarten."""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as exc:
            exc.exit_code = EXIT_ERROR
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = EXIT_ERROR
            raise


@click.group(cls=MerisurfGroup)
@click.option('-d', '--debug', is_flag=True, default=False, help='Log at DEBUG level.')
@click.option('--settings', 'settings_file', type=click.Path(exists=True, dir_okay=False),
              help='Python settings module overriding merisurf.defaultconfig.')
@click.pass_context
def cli(ctx, debug, settings_file):
    settings = None
    if settings_file:
        try:
            settings = utils.load_settings(settings_file)
        except ImportError as exc:
            click.echo(exc, err=True)
            click.echo('failed importing settings file', err=True)
            ctx.exit(EXIT_ERROR)
    logger = utils.get_logger(settings=settings)
    if debug:
        logger.setLevel(logging.DEBUG)
    ctx.obj = {'settings': settings, 'logger': logger}


def scene_options(func):
    options = [
        click.option('--curve', required=True, help='great | small:<theta0> | spiral:<slope>'),
        click.option('--profile', required=True,
                     help='line:<beta>[,f0[,g0]] | circle:<a>,<c1>,<c2> | cosh:<A>,<b>,<c> | '
                          'fromf:<expr> | kappa:<expr>'),
        click.option('--u', 'u_range', required=True, help='u range a:b'),
        click.option('--v', 'v_range', required=True, help='v range a:b'),
        click.option('--nu', type=int, default=None, help='grid nodes in u (>= 8)'),
        click.option('--nv', type=int, default=None, help='grid nodes in v (>= 8)'),
        click.option('--sign', type=int, default=1, help="sign of g' (+1 or -1)"),
        click.option('--tol-kappa', type=float, default=None),
        click.option('--tol-alpha', type=float, default=None),
        click.option('--tol-ode', type=float, default=None),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _scene(ctx, curve, profile, u_range, v_range, nu, nv, sign):
    grid = utils.setting(ctx.obj['settings'], 'grid')
    spec = SceneSpec(curve, profile, u_range, v_range,
                     grid['nu'] if nu is None else nu,
                     grid['nv'] if nv is None else nv, sign)
    return build_scene(spec)


def _fail(ctx, exc):
    click.echo('error: %s' % exc, err=True)
    ctx.exit(EXIT_ERROR)


@click.command()
@scene_options
@click.pass_context
def classify(ctx, curve, profile, u_range, v_range, nu, nv, sign, tol_kappa, tol_alpha, tol_ode):
    """Classify a meridian surface and print the verdict as JSON."""
    settings = ctx.obj['settings']
    try:
        surface, grid = _scene(ctx, curve, profile, u_range, v_range, nu, nv, sign)
        tol = weingarten.Tolerances.from_settings(settings, kappa=tol_kappa, alpha=tol_alpha, ode=tol_ode)
        verdict = weingarten.classify(surface, grid, tol, GridEngine(settings, ctx.obj['logger']),
                                      utils.setting(settings, 'hu_step'))
    except (GeometryError, ValueError) as exc:
        _fail(ctx, exc)
    click.echo(verdict.to_json())
    if verdict.case == weingarten.NOT_WEINGARTEN:
        ctx.exit(EXIT_NOT_WEINGARTEN)
    if verdict.case == weingarten.INDETERMINATE:
        ctx.exit(EXIT_INDETERMINATE)
    ctx.exit(EXIT_POSITIVE)


@click.command()
@scene_options
@click.option('--out', required=True, type=click.Path(dir_okay=False), help='CSV file to write')
@click.pass_context
def curvature(ctx, curve, profile, u_range, v_range, nu, nv, sign, tol_kappa, tol_alpha, tol_ode, out):
    """Write K, H and the residual on the grid as CSV."""
    settings = ctx.obj['settings']
    try:
        surface, grid = _scene(ctx, curve, profile, u_range, v_range, nu, nv, sign)
        engine = GridEngine(settings, ctx.obj['logger'])
        residual_grid = weingarten.residual(surface, grid, engine, utils.setting(settings, 'hu_step'))
        rows = curvature_rows(surface, residual_grid, engine)
        with open(out, 'w', newline='') as stream:
            write_curvature_csv(stream, rows)
    except (GeometryError, ValueError, OSError) as exc:
        _fail(ctx, exc)
    ctx.obj['logger'].info('Wrote %d rows to %s', len(rows), out)


@click.command()
@scene_options
@click.option('--out', required=True, type=click.Path(dir_okay=False), help='OBJ file to write')
@click.option('--project', type=int, default=3, help='coordinate (1-4) dropped from the E4 points')
@click.pass_context
def mesh(ctx, curve, profile, u_range, v_range, nu, nv, sign, tol_kappa, tol_alpha, tol_ode, out, project):
    """Write the surface over the closed grid as a Wavefront OBJ mesh."""
    try:
        if project not in (1, 2, 3, 4):
            raise ValueError('--project must be 1, 2, 3 or 4, got %d' % project)
        surface, grid = _scene(ctx, curve, profile, u_range, v_range, nu, nv, sign)
        with open(out, 'w', newline='') as stream:
            write_obj(stream, surface, grid, project)
    except (GeometryError, ValueError, OSError) as exc:
        _fail(ctx, exc)
    ctx.obj['logger'].info('Wrote %dx%d mesh to %s', grid.nu, grid.nv, out)


@click.command()
@click.option('--family', required=True, type=click.Choice(sorted(weingarten.FAMILIES)))
@click.option('--a', type=float, default=None)
@click.option('--c1', type=float, default=None)
@click.option('--c2', type=float, default=None)
@click.option('--A', 'amplitude', type=float, default=None)
@click.option('--b', type=float, default=None)
@click.option('--c', type=float, default=None)
@click.option('--beta', type=float, default=None)
@click.option('--nu', type=int, default=None)
@click.option('--nv', type=int, default=None)
@click.pass_context
def verify(ctx, family, a, c1, c2, amplitude, b, c, beta, nu, nv):
    """Rebuild a family's canonical surface and check it end to end."""
    settings = ctx.obj['settings']
    given = {'a': a, 'c1': c1, 'c2': c2, 'A': amplitude, 'b': b, 'c': c, 'beta': beta}
    params = FamilyParams(**{k: v for k, v in given.items() if v is not None})
    tag = weingarten.FAMILIES[family]
    try:
        if any(n is not None and n < MIN_NODES for n in (nu, nv)):
            raise ValueError('grid must be at least %dx%d' % (MIN_NODES, MIN_NODES))
        report = weingarten.verify_family(tag, params, engine=GridEngine(settings, ctx.obj['logger']),
                                              settings=settings, shape=(nu, nv))
        findings = audit.run_audit()
    except (GeometryError, ValueError) as exc:
        _fail(ctx, exc)

    click.echo(report.format())
    click.echo(findings.format())
    document = report.to_dict()
    document['audit'] = findings.to_dict()
    click.echo(json.dumps(document, indent=2))
    ctx.exit(EXIT_POSITIVE if report.passed else EXIT_ERROR)


cli.add_command(classify)
cli.add_command(curvature)
cli.add_command(mesh)
cli.add_command(verify)


if __name__ == "__main__":
    cli()
