if __name__ == "__main__":
    from lrug import lrug_cli

    lrug_cli()
