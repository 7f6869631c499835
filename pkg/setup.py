from setuptools import setup

SCHEDULE_VERSION = '0.3.0'

with open('README.md', 'r') as f:
    long_description = f.read()

setup(
    name='PgBufferSim',
    packages=['PgBufferSim', 'PgBufferSim/Exceptions', 'PgBufferSim/Objects', 'PgBufferSim/Services',
              'PgBufferSim/Utils'],
    version=SCHEDULE_VERSION,
    description='A trace-driven simulator for PostgreSQL-style buffer pool eviction policies.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='MIT',
    keywords=[
        'PostgreSQL', 'buffer pool', 'eviction policy', 'cache simulation', 'Belady'
    ],
    classifiers=[
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Natural Language :: English',
    ],
    install_requires=[
        'numpy'],
    extras_require={
        "pandas": ["pandas"]
    },
    entry_points={
        "console_scripts": ["pgbuffersim=PgBufferSim.Cli:main"]
    },
    python_requires='>=3.7',
)
