from idem2.cli.main import main
