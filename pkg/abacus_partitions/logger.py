from rich.console import Console
from rich.theme import Theme

# Diagnostics go to stderr; stdout is reserved for command output
custom_theme = Theme({
    "info": "dim cyan",
    "warning": "magenta",
    "danger": "bold red",
    "success": "bold green",
    "stage": "bold blue",
    "value": "dim white",
})

console = Console(theme=custom_theme, stderr=True)

_verbose = False


def set_verbose(enabled: bool):
    """Enables or disables info and stage messages."""
    global _verbose
    _verbose = enabled


def is_verbose() -> bool:
    return _verbose


def log_info(message: str):
    """Logs a general information message."""
    if _verbose:
        console.print(f"[info]INFO:[/info] {message}")


def log_success(message: str):
    """Logs a success message."""
    if _verbose:
        console.print(f"[success]SUCCESS:[/success] {message}")


def log_warning(message: str):
    """Logs a warning; always shown."""
    console.print(f"[warning]WARNING:[/warning] {message}")


def log_danger(message: str):
    """Logs a critical error or danger message; always shown."""
    console.print(f"[danger]DANGER:[/danger] {message}")


def log_stage(stage: str, action: str, details: str = ""):
    """Logs a step taken by one of the computation stages."""
    if _verbose:
        console.print(f"[stage]{stage.upper()}:[/stage] {action} [value]{details}[/value]")
