import setuptools

setuptools.setup(
    name='polytri',
    version="0.1.0",
    author='Warren Jitsing',
    author_email='warren.jitsing@gmail.com',
    packages=setuptools.find_packages(
        where='.',
        include=['polytri', 'polytricli'],
        exclude=['tests']
    ),
    entry_points={
        'console_scripts': [
            'polytri=polytricli.main:main',
        ],
    }
)
