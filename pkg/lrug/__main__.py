from lrug import lrug_cli

if __name__ == "__main__":
    lrug_cli()
