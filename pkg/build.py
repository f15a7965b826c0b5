import subprocess
import sys
from pathlib import Path

APP_NAME = "weighted_homology"
ENTRY_POINT = "src/__main__.py"

# Modules PyInstaller misses because they are imported lazily
HIDDEN_IMPORTS = ["dotenv", "networkx", "sympy", "sympy.polys", "sympy.parsing.sympy_parser", "concurrent.futures", "logging.handlers"]


def pyinstaller_command() -> list:
    command = ["pyinstaller", f"--name={APP_NAME}", "--onefile", "--console"]
    command += [f"--hidden-import={module}" for module in HIDDEN_IMPORTS]
    command.append(ENTRY_POINT)
    return command


def build_executable():
    """
    Build the weighted_homology command-line binary with PyInstaller
    """
    project_root = Path(__file__).parent.absolute()
    dist_dir = project_root / "dist"
    for directory in (dist_dir, project_root / "build"):
        directory.mkdir(exist_ok=True)

    try:
        subprocess.run(pyinstaller_command(), check=True, cwd=project_root)
    except subprocess.CalledProcessError as e:
        print(f"Build failed with error: {e}")
        sys.exit(1)

    executable_name = f"{APP_NAME}.exe" if sys.platform == "win32" else APP_NAME
    print("Build completed successfully!")
    print(f"Executable can be found in: {dist_dir / executable_name}")


if __name__ == "__main__":
    build_executable()
